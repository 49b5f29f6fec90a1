"""Crossing-count bounds and the constructions that realize them.

Closed-form maxima for both tile families, a generator for corner
mosaics meeting the square bound exactly, rectangular pretzel mosaics,
and the dense traditional-tile weave whose knot needs a larger corner
mosaic than a traditional one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Diagram, KmtCertificate, kmt_certificate
from .grid import Mosaic, blank, crossing_count, validate
from .tiles import Family, catalog
from .trace import trace

EVEN_EVEN = "even-even"
ODD_ODD = "odd-odd"
ODD_EVEN = "odd-even"
TRADITIONAL_EVEN = "traditional-even"
TRADITIONAL_ODD = "traditional-odd"


@dataclass(frozen=True)
class BoundReport:
    family: Family
    rows: int
    cols: int
    bound: int
    formula_case: str


def corner_square_bound(n: int) -> int:
    """Maximum crossing tiles on a corner n x n mosaic."""
    if n < 3:
        raise ValueError("bound formulas start at n = 3")
    return n * n // 2 if n % 2 == 0 else (n * n + n - 4) // 2


def corner_rect_bound(m: int, n: int) -> int:
    """Maximum crossing tiles on a corner m x n mosaic.

    The stated cases assume the odd dimension first (and the larger of
    two odd dimensions second); other shapes are computed as the
    transpose, which leaves the maximum unchanged.
    """
    if m < 3 or n < 3:
        raise ValueError("bound formulas start at 3")
    if m % 2 == 0 and n % 2 == 0:
        return m * n // 2
    if m % 2 == 0 or (m % 2 == 1 and n % 2 == 1 and m > n):
        m, n = n, m
    return (m * n + n - 4) // 2


def traditional_square_bound(n: int) -> int:
    """Maximum crossing tiles on a traditional n x n knot mosaic."""
    if n < 4:
        raise ValueError("the traditional bound starts at n = 4")
    return (n - 2) ** 2 - (n - 3 if n % 2 == 0 else 2)


def bound_report(family: Family, rows: int, cols: int) -> BoundReport:
    if family is Family.TRADITIONAL:
        if rows != cols:
            raise ValueError("traditional bounds are square-only")
        case = TRADITIONAL_EVEN if rows % 2 == 0 else TRADITIONAL_ODD
        return BoundReport(family, rows, cols, traditional_square_bound(rows), case)
    if rows % 2 == 0 and cols % 2 == 0:
        case = EVEN_EVEN
    elif rows % 2 == 1 and cols % 2 == 1:
        case = ODD_ODD
    else:
        case = ODD_EVEN
    return BoundReport(family, rows, cols, corner_rect_bound(rows, cols), case)


# -- maximal-crossing corner mosaics -----------------------------------------

def _odd_max_cells(n: int) -> list[int]:
    """Stripe layout: crossing columns at even c capped like pretzel
    twist regions, a sparse alternating top row, and a dense bottom row
    of crossings joined by two diagonal tiles."""
    g = [[0] * n for _ in range(n)]
    g[0][0] = 6
    g[0][n - 1] = 5
    for c in range(1, n - 1):
        g[0][c] = 9 if c % 2 == 1 else 1
    for r in range(1, n - 2):
        for c in range(0, n, 2):
            g[r][c] = 9
    g[n - 2][0] = g[n - 2][n - 1] = 9
    for c in range(2, n - 2, 2):
        g[n - 2][c] = 1
    g[n - 1][0] = 5
    g[n - 1][n - 1] = 6
    for c in range(1, n - 1):
        g[n - 1][c] = 9
    return [x for row in g for x in row]


def _even_max_cells(n: int) -> list[int]:
    """Nested rings of crossings, each closed off by four diagonal
    corner tiles; ring counts 4k - 8 telescope to n^2 / 2.  When the
    innermost region is 2 x 2 it holds a capped two-crossing twist."""
    g = [[0] * n for _ in range(n)]
    lo, hi = 0, n - 1
    while lo < hi:
        if hi - lo == 1:
            g[lo][lo] = g[hi][lo] = 9
            g[lo - 1][lo] = 2
            g[hi + 1][lo] = 1
            break
        g[lo][lo] = g[hi][hi] = 6
        g[lo][hi] = g[hi][lo] = 5
        for c in range(lo + 1, hi):
            g[lo][c] = g[hi][c] = 9
        for r in range(lo + 1, hi):
            g[r][lo] = g[r][hi] = 9
        lo, hi = lo + 2, hi - 2
    return [x for row in g for x in row]


def max_pattern(n: int) -> Mosaic:
    """A valid corner n x n mosaic realizing corner_square_bound(n).

    Purely constructive; the result is validated and its crossing count
    checked against both the closed form and the window relaxation.
    """
    if n < 3:
        raise ValueError("maximal patterns start at n = 3")
    target = corner_square_bound(n)
    cells = _odd_max_cells(n) if n % 2 == 1 else _even_max_cells(n)
    m = Mosaic(Family.CORNER, n, n, tuple(cells))
    report = validate(m)
    assert report.valid and report.crossings == target
    return m


# -- pretzel mosaics ---------------------------------------------------------

def pretzel_mosaic(twists: list[int]) -> Mosaic:
    """Rectangular corner mosaic of the pretzel link with the given twist
    regions: one crossing column per region (|t| stacked crossings padded
    with double vertical arcs), spacer columns between, and one closure
    row above and below.
    """
    if not twists or any(t == 0 for t in twists):
        raise ValueError("twists must be a nonempty list of nonzero integers")
    k = len(twists)
    height = max(abs(t) for t in twists)
    rows, cols = height + 2, 2 * k + 1
    m = blank(Family.CORNER, rows, cols)
    cells = list(m.cells)

    def put(r, c, code):
        cells[r * cols + c] = code

    for i, t in enumerate(twists):
        col = 2 * i + 1
        cross = 9 if t > 0 else 10
        for r in range(1, abs(t) + 1):
            put(r, col, cross)
        for r in range(abs(t) + 1, height + 1):
            put(r, col, 8)
    if k == 1:
        put(0, 1, 2)
        put(rows - 1, 1, 1)
    else:
        put(0, 1, 6)
        put(rows - 1, 1, 5)
        for j in range(2, 2 * k - 1):
            put(0, j, 7 if j % 2 == 0 else 1)
            put(rows - 1, j, 7 if j % 2 == 0 else 2)
        put(0, 2 * k - 1, 5)
        put(rows - 1, 2 * k - 1, 6)
    return Mosaic(Family.CORNER, rows, cols, tuple(cells))


def pretzel_component_oracle(twists: list[int]) -> int:
    """Component count of the pretzel link by composing strand
    permutations: an even twist region keeps its two strands separate, an
    odd one swaps them; the closure threads regions in a cycle."""
    k = len(twists)
    # endpoints 2i (left) and 2i+1 (right) at the top of region i
    pairing = {}
    for i, t in enumerate(twists):
        top_l, top_r = 2 * i, 2 * i + 1
        bot_l, bot_r = 2 * k + 2 * i, 2 * k + 2 * i + 1
        if t % 2 == 0:
            pairing[top_l], pairing[top_r] = bot_l, bot_r
        else:
            pairing[top_l], pairing[top_r] = bot_r, bot_l
        pairing[pairing[top_l]] = top_l
        pairing[pairing[top_r]] = top_r
    # closure arcs: right of region i to left of region i+1, around
    links = {}
    for i in range(k):
        j = (i + 1) % k
        links[2 * i + 1] = 2 * j
        links[2 * j] = 2 * i + 1
        links[2 * k + 2 * i + 1] = 2 * k + 2 * j
        links[2 * k + 2 * j] = 2 * k + 2 * i + 1
    seen = set()
    comps = 0
    for start in range(4 * k):
        if start in seen:
            continue
        comps += 1
        x = start
        while x not in seen:
            seen.add(x)
            y = pairing[x]
            seen.add(y)
            x = links[y]
    return comps


# -- traditional saturated weave ---------------------------------------------

def _complete_traditional(n: int, fixed: dict[int, int]) -> Mosaic | None:
    """First valid traditional mosaic extending the fixed cells."""
    cat = catalog(Family.TRADITIONAL)
    use = [{e: int(e in t.endpoints_used()) for e in "NESW"} for t in cat]
    cells = [0] * (n * n)

    def rec(i):
        if i == n * n:
            return True
        r, c = divmod(i, n)
        top = 0 if r == 0 else use[cells[i - n]]["S"]
        left = 0 if c == 0 else use[cells[i - 1]]["E"]
        want = fixed.get(i)
        for code in range(11) if want is None else (want,):
            u = use[code]
            if u["N"] != top or u["W"] != left:
                continue
            if c == n - 1 and u["E"]:
                continue
            if r == n - 1 and u["S"]:
                continue
            cells[i] = code
            if rec(i + 1):
                return True
            cells[i] = 0
        return False

    if rec(0):
        return Mosaic(Family.TRADITIONAL, n, n, tuple(cells))
    return None


def _weave_candidates(n: int):
    """Deterministic stream of dense traditional weaves: interior cells
    checkerboarded with the two crossing tiles, minus a small set of
    interior cells freed to reconnect the strands into one component."""
    interior = [(r, c) for r in range(1, n - 1) for c in range(1, n - 1)]
    corners = [(1, 1), (1, n - 2), (n - 2, 1), (n - 2, n - 2)]
    drop_sets: list[list[tuple[int, int]]] = [[]]
    drop_sets += [[p] for p in corners]
    drop_sets += [[p, q] for i, p in enumerate(corners)
                  for q in corners[i + 1:]]
    drop_sets += [[p, q, s] for i, p in enumerate(corners)
                  for j, q in enumerate(corners[i + 1:], i + 1)
                  for s in corners[j + 1:]]
    drop_sets.append(list(corners))
    for parity in (0, 1):
        for drops in drop_sets:
            base = {}
            for r, c in interior:
                if (r, c) in drops:
                    continue
                base[r * n + c] = 9 if (r + c) % 2 == parity else 10
            if not drops:
                yield base
                continue
            # freed cells range over the non-crossing tiles
            def assign(i, acc):
                if i == len(drops):
                    yield dict(acc)
                    return
                r, c = drops[i]
                for code in range(9):
                    acc[r * n + c] = code
                    yield from assign(i + 1, acc)
                del acc[r * n + c]
            yield from assign(0, dict(base))


@dataclass(frozen=True)
class WeaveResult:
    mosaic: Mosaic
    diagram: Diagram
    certificate: KmtCertificate


def saturated_weave_traditional(n: int, floor: int | None = None) -> WeaveResult:
    """A traditional n x n mosaic tracing to a reduced alternating knot
    diagram with as many crossings as the candidate family reaches.

    For n = 9 the best candidate carries enough crossings to beat the
    corner-family bound, which is the point of the construction.
    """
    if n < 5 or n % 2 == 0:
        raise ValueError("the weave construction needs odd n >= 5")
    if floor is None:
        floor = 44 if n == 9 else 0
    best: WeaveResult | None = None
    for fixed in _weave_candidates(n):
        m = _complete_traditional(n, fixed)
        if m is None:
            continue
        d = trace(m)
        if d.components() != 1:
            continue
        if not (d.is_reduced() and d.is_alternating() and d.is_connected()):
            continue
        cert = kmt_certificate(d)
        if cert is None:
            continue
        if best is None or cert.crossing_number > \
                best.certificate.crossing_number:
            best = WeaveResult(m, d, cert)
        if best.certificate.crossing_number == traditional_square_bound(n):
            break
    if best is None or best.certificate.crossing_number < floor:
        got = 0 if best is None else best.certificate.crossing_number
        raise RuntimeError(
            f"weave search exhausted: best {got} crossings, floor {floor}")
    return best


@dataclass(frozen=True)
class CounterexampleReport:
    weave: WeaveResult
    crossing_number: int
    corner_bound: int
    holds: bool

    def conclusion(self) -> str:
        if not self.holds:
            return "counterexample check failed"
        return (f"a knot with crossing number {self.crossing_number} fits a "
                f"traditional 9-mosaic, but a corner 9-mosaic caps crossings "
                f"at {self.corner_bound}: its corner mosaic number is at "
                f"least 10")


def counterexample_check(corner_bound=corner_square_bound
                         ) -> CounterexampleReport:
    """Establish that some knot fits a traditional 9-mosaic but no corner
    9-mosaic: the weave's certified crossing number exceeds the corner
    crossing capacity."""
    weave = saturated_weave_traditional(9)
    c = weave.certificate.crossing_number
    cap = corner_bound(9)
    return CounterexampleReport(weave, c, cap, c > cap)
