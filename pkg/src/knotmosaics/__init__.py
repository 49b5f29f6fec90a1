"""Corner-connection knot mosaics: tile algebra, censuses, invariants and
crossing bounds."""

from .tiles import Family, SymmetryOp, Tile, catalog, tile
from .grid import (Mosaic, MosaicFormatError, Skeleton, ValidationReport,
                   blank, canonical_form, crossing_count, non_blank_count,
                   parse, serialize, skeleton, validate)
from .trace import trace
from .diagram import Diagram, KmtCertificate, PDCode, kmt_certificate, pd_code
from .laurent import Laurent
from .bracket import (bracket, bracket_skein, determinant, jones_polynomial,
                      normalized_bracket)
from .knot_table import KnotId, classify, reference_table
from .census import (CensusQuery, CensusRecord, CensusSummary, census,
                     enumerate_mosaics, layout_census, max_crossings_empirical,
                     max_marking_relaxation, mcc_search, min_tiles)
from .bounds import (BoundReport, CounterexampleReport, WeaveResult,
                     bound_report, corner_rect_bound, corner_square_bound,
                     counterexample_check, max_pattern, pretzel_mosaic,
                     saturated_weave_traditional, traditional_square_bound)

__version__ = "0.1.0"

__all__ = [
    "Family", "SymmetryOp", "Tile", "catalog", "tile",
    "Mosaic", "MosaicFormatError", "Skeleton", "ValidationReport",
    "blank", "canonical_form", "crossing_count", "non_blank_count",
    "parse", "serialize", "skeleton", "validate",
    "trace",
    "Diagram", "KmtCertificate", "PDCode", "kmt_certificate", "pd_code",
    "Laurent",
    "bracket", "bracket_skein", "determinant", "jones_polynomial",
    "normalized_bracket",
    "KnotId", "classify", "reference_table",
    "CensusQuery", "CensusRecord", "CensusSummary", "census",
    "enumerate_mosaics", "layout_census", "max_crossings_empirical",
    "max_marking_relaxation", "mcc_search", "min_tiles",
    "BoundReport", "CounterexampleReport", "WeaveResult", "bound_report",
    "corner_rect_bound", "corner_square_bound", "counterexample_check",
    "max_pattern", "pretzel_mosaic", "saturated_weave_traditional",
    "traditional_square_bound",
    "__version__",
]
