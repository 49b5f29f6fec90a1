"""Kauffman bracket and normalized bracket from PD codes.

For a PD tuple (a, b, c, d) listed counterclockwise from the incoming
under-strand arc, the A-smoothing joins a-b and c-d, the B-smoothing joins
a-d and b-c.  The loop value is delta = -A^2 - A^-2 and the bracket of the
unknot is 1.

Two independent evaluations are provided: a state sum over all 2^c
smoothings (union-find loop counting) and a skein recursion that smooths
one crossing at a time.  They are used as mutual oracles in the tests.
"""

from __future__ import annotations

from .diagram import PDCode
from .laurent import Laurent, delta

MAX_CROSSINGS = 16  # bounds state-sum work at 2^16 states


class BracketLimitError(ValueError):
    pass


def _check(pd: PDCode):
    if pd.n_crossings > MAX_CROSSINGS:
        raise BracketLimitError(
            f"{pd.n_crossings} crossings exceeds the {MAX_CROSSINGS}-crossing bracket limit")


def bracket(pd: PDCode) -> Laurent:
    """State-sum Kauffman bracket of the diagram behind ``pd``."""
    _check(pd)
    n = pd.n_crossings
    labels = sorted({x for t in pd.tuples for x in t})
    index = {x: i for i, x in enumerate(labels)}
    joins_a = []
    joins_b = []
    for (a, b, c, d) in pd.tuples:
        joins_a.append(((index[a], index[b]), (index[c], index[d])))
        joins_b.append(((index[a], index[d]), (index[b], index[c])))
    m = len(labels)
    d_poly = delta()
    if n == 0:
        return d_poly ** (pd.free_loops - 1) if pd.free_loops else Laurent.one()
    total = Laurent.zero()
    for state in range(1 << n):
        parent = list(range(m))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        a_count = 0
        for i in range(n):
            if state >> i & 1:
                pairs = joins_b[i]
            else:
                pairs = joins_a[i]
                a_count += 1
            for x, y in pairs:
                parent[find(x)] = find(y)
        loops = len({find(x) for x in range(m)}) + pd.free_loops
        exponent = a_count - (n - a_count)
        total = total + (d_poly ** (loops - 1)).shift(exponent)
    return total


def bracket_skein(pd: PDCode) -> Laurent:
    """Skein-recursion bracket; independent of the state-sum path."""
    _check(pd)

    def loops_of(pairings: list[tuple[int, int]]) -> int:
        succ: dict[int, list[int]] = {}
        for x, y in pairings:
            succ.setdefault(x, []).append(y)
            succ.setdefault(y, []).append(x)
        seen = set()
        loops = 0
        for start in succ:
            if start in seen:
                continue
            loops += 1
            stack = [start]
            while stack:
                u = stack.pop()
                if u in seen:
                    continue
                seen.add(u)
                stack.extend(succ[u])
        return loops

    def rec(tuples: list[tuple[int, int, int, int]],
            pairings: list[tuple[int, int]]) -> Laurent:
        if not tuples:
            loops = loops_of(pairings) + pd.free_loops
            return delta() ** (loops - 1) if loops else Laurent.one()
        (a, b, c, d), rest = tuples[0], tuples[1:]
        term_a = rec(rest, pairings + [(a, b), (c, d)]).shift(1)
        term_b = rec(rest, pairings + [(a, d), (b, c)]).shift(-1)
        return term_a + term_b

    return rec(list(pd.tuples), [])


def normalized_bracket(pd: PDCode) -> Laurent:
    """(-A)^(-3w) times the bracket: invariant of the underlying link."""
    w = pd.writhe()
    sign = 1 if w % 2 == 0 else -1
    return bracket(pd).shift(-3 * w) * sign


def jones_polynomial(f: Laurent) -> Laurent:
    """Rewrite a knot's normalized bracket in the Jones variable t = A^-4."""
    coeffs = {}
    for e, k in f.coeffs().items():
        if e % 4:
            raise ValueError("not a knot polynomial (A-exponent not divisible by 4)")
        coeffs[-e // 4] = k
    return Laurent(coeffs)


def determinant(f: Laurent) -> int:
    """|V(-1)| computed from the normalized bracket of a knot."""
    return abs(jones_polynomial(f).evaluate_unit(-1))
