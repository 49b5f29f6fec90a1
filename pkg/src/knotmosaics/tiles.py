"""Tile catalogs for both mosaic families and the square-symmetry action.

Corner-family tiles have their connection points at tile corners (NW, NE,
SE, SW); traditional tiles at edge midpoints (N, E, S, W).  Each family has
eleven tiles: one blank, four single arcs, two "straight" tiles (diagonals
for the corner family, lines for the traditional one), two double arcs and
two crossings.

Corner labeling convention (codes):
    T1=NW-NE, T2=SW-SE, T3=NE-SE, T4=NW-SW, T5=NW-SE, T6=NE-SW,
    T7={NW-NE, SW-SE}, T8={NW-SW, NE-SE},
    T9=crossing with NW-SE over, T10=crossing with NE-SW over.
Traditional labeling:
    T1=N-E, T2=E-S, T3=S-W, T4=W-N, T5=N-S, T6=E-W,
    T7={N-E, S-W}, T8={E-S, W-N},
    T9=crossing with N-S over, T10=crossing with E-W over.

The T7/T8 and T9/T10 order within each family is an arbitrary convention;
nothing downstream depends on it.

Symmetry tables are generated from endpoint geometry rather than written by
hand: every endpoint is identified with its (row, col) offset inside the
unit cell and the eight elements of the square's symmetry group act on
those offsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

Pair = frozenset  # an unordered endpoint pair


class Family(Enum):
    CORNER = "corner"
    TRADITIONAL = "traditional"

    @property
    def endpoints(self) -> tuple[str, ...]:
        return CORNER_ENDPOINTS if self is Family.CORNER else TRADITIONAL_ENDPOINTS


CORNER_ENDPOINTS = ("NW", "NE", "SE", "SW")
TRADITIONAL_ENDPOINTS = ("N", "E", "S", "W")

# (row, col) offset of each endpoint inside a unit cell, doubled so all
# coordinates are integers (corners at 0/2, edge midpoints at 1).
_OFFSET = {
    "NW": (0, 0), "NE": (0, 2), "SE": (2, 2), "SW": (2, 0),
    "N": (0, 1), "E": (1, 2), "S": (2, 1), "W": (1, 0),
}
_OFFSET_TO_NAME = {v: k for k, v in _OFFSET.items()}


@dataclass(frozen=True)
class Tile:
    family: Family
    code: int
    matching: frozenset[Pair]
    over: Pair | None = None  # the over-strand pair, crossings only

    @property
    def is_blank(self) -> bool:
        return not self.matching

    @property
    def is_crossing(self) -> bool:
        return self.over is not None

    def uses(self, endpoint: str) -> bool:
        return any(endpoint in pair for pair in self.matching)

    def endpoints_used(self) -> frozenset[str]:
        return frozenset(e for pair in self.matching for e in pair)

    def __repr__(self) -> str:
        return f"Tile({self.family.value}, T{self.code})"


def _corner_catalog() -> tuple[Tile, ...]:
    P = lambda a, b: Pair((a, b))
    cross = frozenset({P("NW", "SE"), P("NE", "SW")})
    spec = [
        frozenset(), {P("NW", "NE")}, {P("SW", "SE")}, {P("NE", "SE")},
        {P("NW", "SW")}, {P("NW", "SE")}, {P("NE", "SW")},
        {P("NW", "NE"), P("SW", "SE")}, {P("NW", "SW"), P("NE", "SE")},
    ]
    tiles = [Tile(Family.CORNER, i, frozenset(m)) for i, m in enumerate(spec)]
    tiles.append(Tile(Family.CORNER, 9, cross, P("NW", "SE")))
    tiles.append(Tile(Family.CORNER, 10, cross, P("NE", "SW")))
    return tuple(tiles)


def _traditional_catalog() -> tuple[Tile, ...]:
    P = lambda a, b: Pair((a, b))
    cross = frozenset({P("N", "S"), P("E", "W")})
    spec = [
        frozenset(), {P("N", "E")}, {P("E", "S")}, {P("S", "W")},
        {P("W", "N")}, {P("N", "S")}, {P("E", "W")},
        {P("N", "E"), P("S", "W")}, {P("E", "S"), P("W", "N")},
    ]
    tiles = [Tile(Family.TRADITIONAL, i, frozenset(m)) for i, m in enumerate(spec)]
    tiles.append(Tile(Family.TRADITIONAL, 9, cross, P("N", "S")))
    tiles.append(Tile(Family.TRADITIONAL, 10, cross, P("E", "W")))
    return tuple(tiles)


_CATALOGS = {Family.CORNER: _corner_catalog(), Family.TRADITIONAL: _traditional_catalog()}


def catalog(family: Family) -> tuple[Tile, ...]:
    """The eleven tiles of a family, ordered by code."""
    return _CATALOGS[family]


def tile(family: Family, code: int) -> Tile:
    return _CATALOGS[family][code]


@dataclass(frozen=True)
class SymmetryOp:
    """An element of the square's symmetry group.

    Acting on a cell's local coordinates (r, c) in [0, 1]^2: transpose
    first (if set), then flip rows / columns.  All eight combinations give
    the full group.  Ops with ``transpose`` swap the grid's rows and
    columns, so on non-square grids only the four non-transposing ops
    apply.
    """

    transpose: bool
    flip_r: bool
    flip_c: bool

    @property
    def name(self) -> str:
        return _OP_NAMES[self]

    def map_offset(self, off: tuple[int, int]) -> tuple[int, int]:
        r, c = off
        if self.transpose:
            r, c = c, r
        if self.flip_r:
            r = 2 - r
        if self.flip_c:
            c = 2 - c
        return (r, c)

    def map_endpoint(self, endpoint: str) -> str:
        return _OFFSET_TO_NAME[self.map_offset(_OFFSET[endpoint])]

    def compose(self, other: "SymmetryOp") -> "SymmetryOp":
        """The op 'self after other' (apply ``other`` first)."""
        for op in ALL_OPS:
            if all(
                op.map_offset(o) == self.map_offset(other.map_offset(o))
                for o in ((0, 0), (0, 2), (1, 0))
            ):
                return op
        raise AssertionError("group is closed")  # pragma: no cover

    def inverse(self) -> "SymmetryOp":
        for op in ALL_OPS:
            if self.compose(op) == IDENTITY:
                return op
        raise AssertionError("group has inverses")  # pragma: no cover


ALL_OPS = tuple(
    SymmetryOp(t, fr, fc) for t in (False, True) for fr in (False, True) for fc in (False, True)
)
IDENTITY = SymmetryOp(False, False, False)
ROT90 = SymmetryOp(True, False, True)    # quarter turn (NW -> NE)
ROT180 = SymmetryOp(False, True, True)
ROT270 = SymmetryOp(True, True, False)
FLIP_H = SymmetryOp(False, False, True)  # left-right mirror
FLIP_V = SymmetryOp(False, True, False)  # top-bottom mirror
TRANSPOSE = SymmetryOp(True, False, False)
ANTI_TRANSPOSE = SymmetryOp(True, True, True)

_OP_NAMES = {
    IDENTITY: "identity", ROT90: "rot90", ROT180: "rot180", ROT270: "rot270",
    FLIP_H: "flip_h", FLIP_V: "flip_v",
    TRANSPOSE: "transpose", ANTI_TRANSPOSE: "anti_transpose",
}

SQUARE_OPS = ALL_OPS
RECT_OPS = tuple(op for op in ALL_OPS if not op.transpose)


@lru_cache(maxsize=None)
def _transform_code(family: Family, code: int, op: SymmetryOp) -> int:
    t = _CATALOGS[family][code]
    matching = frozenset(Pair(op.map_endpoint(e) for e in pair) for pair in t.matching)
    over = Pair(op.map_endpoint(e) for e in t.over) if t.over else None
    for cand in _CATALOGS[family]:
        if cand.matching == matching and cand.over == over:
            return cand.code
    raise AssertionError("catalog is closed under symmetry")  # pragma: no cover


def transform_tile(t: Tile, op: SymmetryOp) -> Tile:
    """The catalog tile whose arcs are ``op`` applied to the arcs of ``t``."""
    return _CATALOGS[t.family][_transform_code(t.family, t.code, op)]


MIRROR_SWAP = {9: 10, 10: 9}


def mirror_code(code: int) -> int:
    """Swap over/under strands: the tile of the mirror diagram."""
    return MIRROR_SWAP.get(code, code)
