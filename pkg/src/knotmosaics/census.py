"""Exhaustive mosaic censuses: pruned backtracking enumeration, knot
classification summaries, layout skeletons, and empirical crossing maxima.

The corner-family search fills cells in row-major order and keeps three
incremental structures: lattice-vertex degrees (a completed vertex must
have degree 0 or 2, which forces the endpoint usage of most corners
outright), open-strand endpoint partners (O(1) closed-loop detection),
and running non-blank / crossing tallies for budget pruning.  A closed
loop kills the branch early whenever the query wants a single component,
which is what makes the full 4x4 census tractable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Iterator

from .grid import (Mosaic, Skeleton, blank, canonical_key, crossing_count,
                   every_row_or_every_column_occupied, non_blank_count,
                   skeleton, skeleton_canonical_key, validate)
from .knot_table import KnotId, classify
from .tiles import (ALL_OPS, Family, RECT_OPS, SQUARE_OPS, SymmetryOp,
                    catalog, mirror_code, transform_tile)
from .trace import trace

DEDUP_RAW = "raw"
DEDUP_SYMMETRY = "symmetry"
DEDUP_SYMMETRY_MIRROR = "symmetry+mirror"

OCC_NONE = "none"
OCC_ROW_OR_COL = "every_row_or_every_column"


@dataclass(frozen=True)
class CensusQuery:
    family: Family
    rows: int
    cols: int
    max_non_blank: int | None = None
    min_crossings: int = 0
    max_crossings: int | None = None
    require_single_component: bool = False
    require_prime_table_knot: bool = False
    occupancy_filter: str = OCC_NONE
    dedup: str = DEDUP_SYMMETRY

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("grid must be at least 1x1")
        if self.max_crossings is not None and self.max_crossings < self.min_crossings:
            raise ValueError("crossing bounds are inconsistent")
        if self.dedup not in (DEDUP_RAW, DEDUP_SYMMETRY, DEDUP_SYMMETRY_MIRROR):
            raise ValueError(f"unknown dedup mode {self.dedup!r}")
        if self.occupancy_filter not in (OCC_NONE, OCC_ROW_OR_COL):
            raise ValueError(f"unknown occupancy filter {self.occupancy_filter!r}")


@dataclass(frozen=True)
class CensusRecord:
    mosaic: Mosaic
    knot: KnotId
    non_blank: int
    crossings: int


@dataclass
class KnotStats:
    min_non_blank: int
    count: int
    example: Mosaic
    # canonical skeleton cells -> Skeleton, for records at min_non_blank
    min_skeletons: dict[tuple, Skeleton] = field(default_factory=dict)


@dataclass
class CensusSummary:
    """Aggregated census.  per_knot is keyed by the chirality-qualified
    display name (e.g. "3_1" and "3_1*" separately): the symmetry group
    already identifies a mosaic with its reflections, which depict the
    mirror knot, so chirality classes that survive that identification
    are genuinely distinct census entries."""

    query: CensusQuery
    per_knot: dict[str, KnotStats]
    total_records: int
    nodes: int
    prunes: int

    def knot_names(self) -> set[str]:
        return {name.rstrip("*") for name in self.per_knot}

    def stats_for(self, knot_name: str) -> list[KnotStats]:
        return [ks for name, ks in self.per_knot.items()
                if name.rstrip("*") == knot_name]


# -- tile tables -------------------------------------------------------------

_CORNER_IDX = {"NW": 0, "NE": 1, "SW": 2, "SE": 3}


@lru_cache(maxsize=None)
def _corner_tables():
    cat = catalog(Family.CORNER)
    usage = tuple(
        tuple(int(k in t.endpoints_used()) for k in ("NW", "NE", "SW", "SE"))
        for t in cat)
    arcs = tuple(
        tuple(tuple(sorted(_CORNER_IDX[e] for e in pair)) for pair in t.matching)
        for t in cat)
    return usage, arcs


@lru_cache(maxsize=None)
def _corner_candidates(nw: int, ne: int, sw: int, se: int):
    """Codes whose corner usage matches the required flags (-1 = free)."""
    usage, arcs = _corner_tables()
    out = []
    for code in range(11):
        u = usage[code]
        if u[0] != nw:
            continue
        if ne >= 0 and u[1] != ne:
            continue
        if sw >= 0 and u[2] != sw:
            continue
        if se >= 0 and u[3] != se:
            continue
        out.append((code, u, arcs[code]))
    return tuple(out)


@lru_cache(maxsize=None)
def _symmetry_tables(rows: int, cols: int, include_mirror: bool):
    """Per symmetry op: source-index permutation and code relabeling, so a
    transformed cell tuple is one table-driven pass instead of tile objects."""
    ops = SQUARE_OPS if rows == cols else RECT_OPS
    out = []
    for op in ops:
        perm = [0] * (rows * cols)
        big_r, big_c = (cols, rows) if op.transpose else (rows, cols)
        for r in range(rows):
            for c in range(cols):
                tr, tc = (c, r) if op.transpose else (r, c)
                if op.flip_r:
                    tr = big_r - 1 - tr
                if op.flip_c:
                    tc = big_c - 1 - tc
                perm[tr * big_c + tc] = r * cols + c
        codes = tuple(transform_tile(catalog(Family.CORNER)[k], op).code
                      for k in range(11))
        out.append((tuple(perm), codes))
        if include_mirror:
            out.append((tuple(perm), tuple(mirror_code(k) for k in codes)))
    return tuple(out)


def _is_canonical(cells: tuple, tables) -> bool:
    for perm, codes in tables:
        for j, cj in enumerate(cells):
            t = codes[cells[perm[j]]]
            if t < cj:
                break
            if t > cj:
                cj = None
                break
        else:
            continue
        if cj is None:
            continue
        return False
    return True


# -- corner-family backtracker -----------------------------------------------

def _corner_leaves(q: CensusQuery, prefix: tuple[int, ...] = (),
                   stats: list[int] | None = None) -> Iterator[tuple]:
    """Yield (cells, non_blank, crossings, closed_loops) for every valid
    filling that extends ``prefix`` and satisfies q's structural constraints.

    When q.require_single_component, branches die at the first closed loop
    that leaves other strands open, at a second loop, or at any non-blank
    tile placed after the loop; leaves then carry exactly one loop (or
    none, for the empty mosaic, which the caller discards).
    """
    rows, cols = q.rows, q.cols
    n_cells = rows * cols
    width = cols + 1
    deg = [0] * ((rows + 1) * width)
    other = [-1] * ((rows + 1) * width)
    cells = [0] * n_cells
    if stats is None:
        stats = [0, 0]
    single = q.require_single_component
    budget = q.max_non_blank

    def place(i, code, u, arcs, state):
        """Apply one tile; return (new_state, undo_list) or None."""
        closed, opened = state
        r, c = divmod(i, cols)
        base = r * width + c
        vv = (base, base + 1, base + width, base + width + 1)
        saves = []
        for p, qq in arcs:
            a, b = vv[p], vv[qq]
            da, db = deg[a], deg[b]
            if da == 1 and db == 1:
                if other[a] == b:
                    closed += 1
                    opened -= 2
                else:
                    x, y = other[a], other[b]
                    saves += [(x, other[x]), (y, other[y])]
                    other[x] = y
                    other[y] = x
                    opened -= 2
            elif da == 1:
                x = other[a]
                saves += [(x, other[x]), (b, other[b])]
                other[x] = b
                other[b] = x
            elif db == 1:
                x = other[b]
                saves += [(x, other[x]), (a, other[a])]
                other[x] = a
                other[a] = x
            else:
                saves += [(a, other[a]), (b, other[b])]
                other[a] = b
                other[b] = a
                opened += 2
            deg[a] = da + 1
            deg[b] = db + 1
            saves += [(-1 - a, da), (-1 - b, db)]
        return (closed, opened), saves

    def undo(saves):
        for k, v in reversed(saves):
            if k < 0:
                deg[-1 - k] = v
            else:
                other[k] = v

    def req(d):
        return 1 if d == 1 else 0

    def rec(i, closed, opened, cross, nb):
        stats[0] += 1
        if i == n_cells:
            if cross >= q.min_crossings:
                yield tuple(cells), nb, cross, closed
            return
        r, c = divmod(i, cols)
        base = r * width + c
        last_r, last_c = r == rows - 1, c == cols - 1
        ne_req = req(deg[base + 1]) if last_c else -1
        sw_req = req(deg[base + width]) if last_r else -1
        se_req = req(deg[base + width + 1]) if last_r and last_c else -1
        remaining = n_cells - i - 1
        forced = prefix[i] if i < len(prefix) else None
        for code, u, arcs in _corner_candidates(req(deg[base]), ne_req,
                                                sw_req, se_req):
            if forced is not None and code != forced:
                continue
            if code:
                if single and closed:
                    stats[1] += 1
                    continue
                if budget is not None and nb == budget:
                    stats[1] += 1
                    continue
                if (deg[base + 1] + u[1] > 2 or deg[base + width] + u[2] > 2
                        or deg[base + width + 1] + u[3] > 2):
                    continue
            is_cross = code >= 9
            if is_cross and q.max_crossings is not None \
                    and cross == q.max_crossings:
                stats[1] += 1
                continue
            # future crossings are capped by both the remaining cells and
            # the remaining tile budget; a crossing candidate can still
            # pass where a double-arc failed, so no early break here
            nb2 = nb + (1 if code else 0)
            cap = remaining if budget is None else min(remaining, budget - nb2)
            if cross + (1 if is_cross else 0) + cap < q.min_crossings:
                stats[1] += 1
                continue
            state, saves = place(i, code, u, arcs, (closed, opened))
            ncl, nop = state
            if single and ncl and (nop > 0 or ncl > 1):
                stats[1] += 1
                undo(saves)
                continue
            # each future non-blank tile can absorb at most four of the
            # still-open strand ends
            if budget is not None and nb2 + (nop + 3) // 4 > budget:
                stats[1] += 1
                undo(saves)
                continue
            cells[i] = code
            yield from rec(i + 1, ncl, nop,
                           cross + (1 if is_cross else 0), nb2)
            cells[i] = 0
            undo(saves)

    yield from rec(0, 0, 0, 0, 0)


def _traditional_leaves(q: CensusQuery, stats: list[int]) -> Iterator[tuple]:
    """Plain backtracker for traditional mosaics; desk-scale sizes only.

    Matches interior edge midpoints pairwise and forbids boundary use.
    No strand-connectivity pruning; component filters apply post hoc.
    """
    rows, cols = q.rows, q.cols
    cat = catalog(Family.TRADITIONAL)
    use = [{e: int(e in t.endpoints_used()) for e in "NESW"} for t in cat]
    cells = [0] * (rows * cols)
    budget = q.max_non_blank

    def rec(i, cross, nb):
        stats[0] += 1
        if i == rows * cols:
            if cross >= q.min_crossings:
                yield tuple(cells), nb, cross, None
            return
        r, c = divmod(i, cols)
        top = 0 if r == 0 else use[cells[(r - 1) * cols + c]]["S"]
        left = 0 if c == 0 else use[cells[i - 1]]["E"]
        for code in range(11):
            u = use[code]
            if u["N"] != top or u["W"] != left:
                continue
            if c == cols - 1 and u["E"]:
                continue
            if r == rows - 1 and u["S"]:
                continue
            if code and budget is not None and nb == budget:
                stats[1] += 1
                continue
            if code >= 9 and q.max_crossings is not None \
                    and cross == q.max_crossings:
                stats[1] += 1
                continue
            cells[i] = code
            yield from rec(i + 1, cross + (1 if code >= 9 else 0),
                           nb + (1 if code else 0))
            cells[i] = 0
    yield from rec(0, 0, 0)


def _leaf_stream(q: CensusQuery, stats: list[int],
                 prefix: tuple[int, ...] = ()) -> Iterator[Mosaic]:
    """Structurally-filtered mosaics (validity, budgets, occupancy, dedup)."""
    if q.family is Family.CORNER:
        leaves = _corner_leaves(q, prefix, stats)
    else:
        leaves = _traditional_leaves(q, stats)
    tables = None
    if q.dedup != DEDUP_RAW and q.family is Family.CORNER:
        tables = _symmetry_tables(q.rows, q.cols,
                                  q.dedup == DEDUP_SYMMETRY_MIRROR)
    for cells, nb, cross, closed in leaves:
        # traditional leaves carry no loop count; components checked later
        if q.require_single_component and closed is not None and closed != 1:
            continue
        if tables is not None and not _is_canonical(cells, tables):
            continue
        m = Mosaic(q.family, q.rows, q.cols, cells)
        if q.occupancy_filter == OCC_ROW_OR_COL \
                and not every_row_or_every_column_occupied(m):
            continue
        yield m


_bracket_cache: dict[tuple, tuple[str, str]] = {}


def _classify_mosaic(m: Mosaic) -> KnotId:
    """Classify with memoization keyed by the traced PD code."""
    from .bracket import normalized_bracket
    from .diagram import pd_code
    d = trace(m)
    k = d.components()
    nc = len(d.crossings)
    if k != 1:
        return KnotId(f"Link({k})", "amphichiral", nc)
    if nc == 0:
        return KnotId("unknot", "amphichiral", 0)
    pd = pd_code(d)
    key = (tuple(pd.tuples), tuple(pd.signs))
    hit = _bracket_cache.get(key)
    if hit is None:
        kid = classify(d)
        _bracket_cache[key] = (kid.name, kid.mirror_flag)
        return kid
    name, flag = hit
    return KnotId(name, flag, nc)


def _record_stream(q: CensusQuery, stats: list[int],
                   prefix: tuple[int, ...] = ()) -> Iterator[CensusRecord]:
    for m in _leaf_stream(q, stats, prefix):
        kid = _classify_mosaic(m)
        if q.require_single_component and not kid.is_knot \
                and not kid.name == "Unknown":
            continue
        if q.require_prime_table_knot and kid.name == "unknot":
            continue
        yield CensusRecord(m, kid, non_blank_count(m), crossing_count(m))


def enumerate_mosaics(q: CensusQuery) -> Iterator[Mosaic]:
    """Every valid mosaic satisfying q, once per dedup class."""
    stats = [0, 0]
    if q.require_prime_table_knot or q.require_single_component:
        for rec in _record_stream(q, stats):
            yield rec.mosaic
    else:
        yield from _leaf_stream(q, stats)


def _merge(summary: CensusSummary, rec: CensusRecord) -> None:
    name = str(rec.knot)
    ks = summary.per_knot.get(name)
    sk_key = None
    if rec.mosaic.family is Family.CORNER:
        sk_key = skeleton_canonical_key(rec.mosaic)
    if ks is None:
        ks = KnotStats(rec.non_blank, 0, rec.mosaic)
        summary.per_knot[name] = ks
    if rec.non_blank < ks.min_non_blank:
        ks.min_non_blank = rec.non_blank
        ks.example = rec.mosaic
        ks.min_skeletons.clear()
    if rec.non_blank == ks.min_non_blank and sk_key is not None \
            and sk_key not in ks.min_skeletons:
        ks.min_skeletons[sk_key] = skeleton(rec.mosaic)
    ks.count += 1
    summary.total_records += 1


_census_cache: dict[CensusQuery, CensusSummary] = {}


def _thread_count() -> int:
    try:
        return max(1, int(os.environ.get("MOSAIC_THREADS", "1")))
    except ValueError:
        return 1


def _census_worker(args) -> CensusSummary:
    q, prefix = args
    stats = [0, 0]
    summary = CensusSummary(q, {}, 0, 0, 0)
    for rec in _record_stream(q, stats, prefix):
        _merge(summary, rec)
    summary.nodes, summary.prunes = stats
    return summary


def census(q: CensusQuery) -> CensusSummary:
    """Aggregate the classified census for q (cached per query)."""
    hit = _census_cache.get(q)
    if hit is not None:
        return hit
    threads = _thread_count()
    summary = CensusSummary(q, {}, 0, 0, 0)
    if threads > 1 and q.family is Family.CORNER and q.rows * q.cols >= 9:
        import multiprocessing as mp
        prefixes = [(c,) for c in range(11)]
        with mp.get_context("fork").Pool(threads) as pool:
            parts = pool.map(_census_worker, [(q, p) for p in prefixes])
        for part in sorted(parts, key=lambda s: sorted(s.per_knot)):
            summary.nodes += part.nodes
            summary.prunes += part.prunes
            for name, ks in sorted(part.per_knot.items()):
                mine = summary.per_knot.get(name)
                if mine is None:
                    summary.per_knot[name] = ks
                else:
                    if ks.min_non_blank < mine.min_non_blank:
                        mine.min_non_blank = ks.min_non_blank
                        mine.example = ks.example
                        mine.min_skeletons = dict(ks.min_skeletons)
                    elif ks.min_non_blank == mine.min_non_blank:
                        mine.min_skeletons.update(ks.min_skeletons)
                    mine.count += ks.count
                summary.total_records += ks.count
    else:
        stats = [0, 0]
        for rec in _record_stream(q, stats):
            _merge(summary, rec)
        summary.nodes, summary.prunes = stats
    _census_cache[q] = summary
    return summary


def _knot_census(family: Family, n: int, unknot: bool = False) -> CensusSummary:
    if unknot:
        return census(CensusQuery(family, n, n, require_single_component=True))
    # prime table knots need at least three crossings; pruning on that
    # keeps the full 4x4 run tractable
    return census(CensusQuery(family, n, n, min_crossings=3,
                              require_single_component=True,
                              require_prime_table_knot=True))


def min_tiles(knot_name: str, family: Family, n: int) -> int | None:
    """Fewest non-blank tiles depicting the knot (either chirality) on an
    n x n mosaic."""
    summary = _knot_census(family, n, unknot=knot_name == "unknot")
    mins = [ks.min_non_blank for ks in summary.stats_for(knot_name)]
    return min(mins) if mins else None


def mcc_search(knot_name: str, n_max: int, family: Family = Family.CORNER
               ) -> int | None:
    """Least n <= n_max on which the knot fits; None if none does."""
    for n in range(1, n_max + 1):
        if min_tiles(knot_name, family, n) is not None:
            return n
    return None


def layout_census(q: CensusQuery) -> list[tuple[Skeleton, int, set[str]]]:
    """Skeletons of space-efficient mosaics: per-knot tile-minimal records
    whose knot does not fit on any smaller mosaic, deduplicated up to
    symmetry, with the knots realized by each skeleton."""
    if q.family is not Family.CORNER:
        raise ValueError("layouts are defined for corner mosaics")
    if q.rows != q.cols:
        raise ValueError("layouts are defined on square mosaics")
    n = q.rows
    # a qualifying record depicts a prime knot (>= 3 crossings); past a
    # 3-mosaic the trefoil is excluded too, so 4 is a safe crossing floor
    floor = 3 if n <= 3 else 4
    summary = census(replace(q, min_crossings=max(q.min_crossings, floor),
                             require_single_component=True,
                             require_prime_table_knot=True))
    merged: dict[tuple, tuple[Skeleton, int, set[str]]] = {}
    for name, ks in sorted(summary.per_knot.items()):
        base = name.rstrip("*")
        if base in ("unknot", "Unknown") or base.startswith("Link"):
            continue
        # tile-minimality is per chirality class; a knot whose reflection
        # orbit misses one chirality can have different minima for the two
        if mcc_search(base, n, q.family) != n:
            continue
        for key, sk in sorted(ks.min_skeletons.items()):
            if key in merged:
                merged[key][2].add(name)
            else:
                merged[key] = (sk, sk.non_blank(), {name})
    return sorted(merged.values(), key=lambda t: (t[1], t[0].cells))


# -- exact maxima over all valid mosaics -------------------------------------

_DESK_LIMIT = 9


def max_crossings_empirical(family: Family, n: int) -> int:
    """Maximum crossing tiles over every valid n x n mosaic, links allowed.

    Exhaustive over the same state space as enumeration, but folded into
    a frontier dynamic program so larger n stay cheap.
    """
    if n > _DESK_LIMIT:
        raise ValueError(f"size {n} exceeds the desk-scale limit {_DESK_LIMIT}")
    if family is Family.CORNER:
        return _max_cross_corner(n, n)
    return _max_cross_traditional(n, n)


def _max_cross_corner(rows: int, cols: int) -> int:
    usage, _arcs = _corner_tables()
    width = cols + 1
    NEG = float("-inf")

    @lru_cache(maxsize=None)
    def best(i, prof):
        # prof: degrees of lattice rows r and r+1 when placing cell i
        if i == rows * cols:
            return 0
        r, c = divmod(i, cols)
        last_r, last_c = r == rows - 1, c == cols - 1
        top = NEG
        for code in range(11):
            nw, ne, sw, se = usage[code]
            a, b = prof[c] + nw, prof[c + 1] + ne
            d, e = prof[width + c] + sw, prof[width + c + 1] + se
            if a > 2 or b > 2 or d > 2 or e > 2:
                continue
            if a == 1 or (last_c and b == 1) or (last_r and d == 1) \
                    or (last_r and last_c and e == 1):
                continue
            p = list(prof)
            p[c], p[c + 1], p[width + c], p[width + c + 1] = a, b, d, e
            if last_c:
                nxt = tuple(p[width:]) + (0,) * width
            else:
                nxt = tuple(p)
            sub = best(i + 1, nxt)
            if sub is not NEG:
                top = max(top, sub + (1 if code >= 9 else 0))
        return top

    out = best(0, (0,) * (2 * width))
    best.cache_clear()
    return int(out)


def _max_cross_traditional(rows: int, cols: int) -> int:
    cat = catalog(Family.TRADITIONAL)
    use = [{e: int(e in t.endpoints_used()) for e in "NESW"} for t in cat]
    NEG = float("-inf")

    @lru_cache(maxsize=None)
    def best(i, bottoms, left):
        # bottoms: S-edge usage of the row above, per column; left: E of (i-1)
        if i == rows * cols:
            return 0
        r, c = divmod(i, cols)
        top = NEG
        for code in range(11):
            u = use[code]
            if u["N"] != bottoms[c] or u["W"] != left:
                continue
            if c == cols - 1 and u["E"]:
                continue
            if r == rows - 1 and u["S"]:
                continue
            nb = list(bottoms)
            nb[c] = u["S"]
            nxt_left = 0 if c == cols - 1 else u["E"]
            sub = best(i + 1, tuple(nb), nxt_left)
            if sub is not NEG:
                top = max(top, sub + (1 if code >= 9 else 0))
        return top

    out = best(0, (0,) * cols, 0)
    best.cache_clear()
    return int(out)


def max_marking_relaxation(m: int, n: int) -> int:
    """Exact maximum of marked cells on an m x n grid subject to: every
    2x2 window holds at most 2 marks and the four grid corners are
    unmarked.  Upper-bounds the crossing count of any valid corner mosaic,
    since four-connection-point tiles obey the same window constraint."""
    if m < 2 or n < 2:
        raise ValueError("grid must be at least 2x2")
    corners = {(0, 0), (0, n - 1), (m - 1, 0), (m - 1, n - 1)}

    def popcount(x):
        return bin(x).count("1")

    def row_masks(r):
        banned = sum(1 << c for c in range(n) if (r, c) in corners)
        return [mask for mask in range(1 << n) if not mask & banned]

    @lru_cache(maxsize=None)
    def compatible(prev, cur):
        return all(popcount(prev >> c & 3) + popcount(cur >> c & 3) <= 2
                   for c in range(n - 1))

    frontier = {mask: popcount(mask) for mask in row_masks(0)}
    for r in range(1, m):
        nxt: dict[int, int] = {}
        for cur in row_masks(r):
            best_prev = max((v for p, v in frontier.items()
                             if compatible(p, cur)), default=None)
            if best_prev is not None:
                nxt[cur] = best_prev + popcount(cur)
        frontier = nxt
    return max(frontier.values())
