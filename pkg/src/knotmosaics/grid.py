"""Mosaic grids: the data model, text format, validity and symmetry.

A mosaic is an m x n grid of tile codes from one family.  The ``.cmos``
text format is one header line ``family rows cols`` followed by ``rows``
lines of space-separated codes; ``#`` lines before the header are comments.

Corner-family validity is a local vertex-degree condition: every lattice
vertex must have 0 or 2 arc endpoints from its incident cells ("suitably
connected").  Traditional-family validity requires every interior edge
midpoint to be used by both or neither adjacent tile, and no boundary
midpoint to be used.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .tiles import (
    Family,
    RECT_OPS,
    SQUARE_OPS,
    SymmetryOp,
    Tile,
    _OFFSET,
    catalog,
    mirror_code,
    tile,
    transform_tile,
)


class MosaicFormatError(ValueError):
    """Raised for malformed .cmos input; carries a 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Mosaic:
    family: Family
    rows: int
    cols: int
    cells: tuple[int, ...]  # row-major tile codes

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("mosaic dimensions must be positive")
        if len(self.cells) != self.rows * self.cols:
            raise ValueError("cell count does not match dimensions")
        if any(not 0 <= c <= 10 for c in self.cells):
            raise ValueError("tile code out of range")

    def code_at(self, r: int, c: int) -> int:
        return self.cells[r * self.cols + c]

    def tile_at(self, r: int, c: int) -> Tile:
        return tile(self.family, self.code_at(r, c))

    def with_cell(self, r: int, c: int, code: int) -> "Mosaic":
        cells = list(self.cells)
        cells[r * self.cols + c] = code
        return Mosaic(self.family, self.rows, self.cols, tuple(cells))

    def mirror(self) -> "Mosaic":
        """Swap all over/under crossings (the mirror-image diagram)."""
        return Mosaic(self.family, self.rows, self.cols,
                      tuple(mirror_code(c) for c in self.cells))


def blank(family: Family, rows: int, cols: int) -> Mosaic:
    return Mosaic(family, rows, cols, (0,) * (rows * cols))


def parse(text: str | bytes) -> Mosaic:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    lines = text.split("\n")
    i = 0
    while i < len(lines) and lines[i].lstrip().startswith("#"):
        i += 1
    if i >= len(lines) or not lines[i].strip():
        raise MosaicFormatError("missing header", i + 1)
    header = lines[i].split()
    if len(header) != 3:
        raise MosaicFormatError("header must be 'family rows cols'", i + 1)
    try:
        family = Family(header[0])
    except ValueError:
        raise MosaicFormatError(f"unknown family {header[0]!r}", i + 1) from None
    try:
        rows, cols = int(header[1]), int(header[2])
    except ValueError:
        raise MosaicFormatError("rows/cols must be integers", i + 1) from None
    if rows < 1 or cols < 1:
        raise MosaicFormatError("rows/cols must be positive", i + 1)
    cells: list[int] = []
    for r in range(rows):
        ln = i + 1 + r
        if ln >= len(lines):
            raise MosaicFormatError("unexpected end of input", ln + 1)
        parts = lines[ln].split()
        if len(parts) != cols:
            raise MosaicFormatError(f"expected {cols} codes, got {len(parts)}", ln + 1)
        for p in parts:
            try:
                code = int(p)
            except ValueError:
                raise MosaicFormatError(f"bad tile code {p!r}", ln + 1) from None
            if not 0 <= code <= 10:
                raise MosaicFormatError(f"tile code {code} out of range 0..10", ln + 1)
            cells.append(code)
    for extra in range(i + 1 + rows, len(lines)):
        if lines[extra].strip():
            raise MosaicFormatError("trailing content after grid", extra + 1)
    return Mosaic(family, rows, cols, tuple(cells))


def serialize(m: Mosaic) -> str:
    out = [f"{m.family.value} {m.rows} {m.cols}"]
    for r in range(m.rows):
        out.append(" ".join(str(m.code_at(r, c)) for c in range(m.cols)))
    return "\n".join(out) + "\n"


@dataclass
class ValidationReport:
    valid: bool
    offending_sites: list[tuple[tuple, int]] = field(default_factory=list)
    non_blank: int = 0
    crossings: int = 0


def non_blank_count(m: Mosaic) -> int:
    return sum(1 for c in m.cells if c != 0)


def crossing_count(m: Mosaic) -> int:
    return sum(1 for c in m.cells if c in (9, 10))


def corner_vertex_degrees(m: Mosaic) -> dict[tuple[int, int], int]:
    """Arc-endpoint count at every lattice vertex of a corner mosaic."""
    deg: dict[tuple[int, int], int] = {}
    for r in range(m.rows):
        for c in range(m.cols):
            t = m.tile_at(r, c)
            for e in t.endpoints_used():
                dr, dc = _OFFSET[e]
                v = (r + dr // 2, c + dc // 2)
                deg[v] = deg.get(v, 0) + 1
    return deg


def _traditional_edge_uses(m: Mosaic) -> dict[tuple, int]:
    """Use count per edge-midpoint site: ('h', r, c) above cell (r, c), ('v', r, c) left of it."""
    uses: dict[tuple, int] = {}
    site_of = {"N": lambda r, c: ("h", r, c), "S": lambda r, c: ("h", r + 1, c),
               "W": lambda r, c: ("v", r, c), "E": lambda r, c: ("v", r, c + 1)}
    for r in range(m.rows):
        for c in range(m.cols):
            for e in m.tile_at(r, c).endpoints_used():
                s = site_of[e](r, c)
                uses[s] = uses.get(s, 0) + 1
    return uses


def validate(m: Mosaic) -> ValidationReport:
    bad: list[tuple[tuple, int]] = []
    if m.family is Family.CORNER:
        for v, d in sorted(corner_vertex_degrees(m).items()):
            if d not in (0, 2):
                bad.append((v, d))
    else:
        for s, d in sorted(_traditional_edge_uses(m).items()):
            kind, r, c = s
            boundary = (r == 0 or r == m.rows) if kind == "h" else (c == 0 or c == m.cols)
            if boundary or d != 2:
                bad.append((s, d))
    return ValidationReport(not bad, bad, non_blank_count(m), crossing_count(m))


def applicable_ops(m: Mosaic) -> tuple[SymmetryOp, ...]:
    return SQUARE_OPS if m.rows == m.cols else RECT_OPS


def transform_mosaic(m: Mosaic, op: SymmetryOp) -> Mosaic:
    if op.transpose and m.rows != m.cols:
        raise ValueError(f"{op.name} does not preserve a {m.rows}x{m.cols} shape")
    R, C = (m.cols, m.rows) if op.transpose else (m.rows, m.cols)
    cells = [0] * (R * C)
    for r in range(m.rows):
        for c in range(m.cols):
            tr, tc = (c, r) if op.transpose else (r, c)
            if op.flip_r:
                tr = R - 1 - tr
            if op.flip_c:
                tc = C - 1 - tc
            cells[tr * C + tc] = transform_tile(m.tile_at(r, c), op).code
    return Mosaic(m.family, R, C, tuple(cells))


def orbit(m: Mosaic) -> list[Mosaic]:
    return [transform_mosaic(m, op) for op in applicable_ops(m)]


def canonical_form(m: Mosaic) -> Mosaic:
    """The symmetry-orbit representative with lexicographically least cells."""
    return min(orbit(m), key=lambda im: im.cells)


def canonical_key(m: Mosaic) -> tuple[int, ...]:
    """Cheap canonical orbit key (cell tuple of the canonical form)."""
    return min(im.cells for im in orbit(m))


BLANK = "."
FOUR = "*"


@dataclass(frozen=True)
class Skeleton:
    """A corner mosaic with its four-connection-point tiles anonymized.

    Cells hold exact codes 0..6 plus the FOUR marker for codes 7..10,
    matching the nondeterministic tiles of the layout figures.
    """

    rows: int
    cols: int
    cells: tuple[str, ...]

    def non_blank(self) -> int:
        return sum(1 for c in self.cells if c != "0")

    def render(self) -> str:
        out = []
        for r in range(self.rows):
            row = self.cells[r * self.cols:(r + 1) * self.cols]
            out.append(" ".join(BLANK if c == "0" else c for c in row))
        return "\n".join(out)


def skeleton(m: Mosaic) -> Skeleton:
    if m.family is not Family.CORNER:
        raise ValueError("skeletons are defined for corner mosaics")
    return Skeleton(m.rows, m.cols,
                    tuple(FOUR if c >= 7 else str(c) for c in m.cells))


def skeleton_canonical_key(m: Mosaic) -> tuple[str, ...]:
    """Skeleton cells, minimized over the mosaic symmetry orbit."""
    return min(skeleton(im).cells for im in orbit(m))


def occupancy(m: Mosaic) -> tuple[tuple[bool, ...], tuple[bool, ...]]:
    row_flags = tuple(any(m.code_at(r, c) for c in range(m.cols)) for r in range(m.rows))
    col_flags = tuple(any(m.code_at(r, c) for r in range(m.rows)) for c in range(m.cols))
    return row_flags, col_flags


def every_row_or_every_column_occupied(m: Mosaic) -> bool:
    rows, cols = occupancy(m)
    return all(rows) or all(cols)
