"""End-to-end checks for the published census, layout, bound, and
counterexample results.  The slow 4x4 runs share one in-process census
cache, so ordering within this file matters: the census test warms the
cache for everything after it."""

import random

import pytest

from knotmosaics.bounds import (corner_rect_bound, corner_square_bound,
                                counterexample_check, max_pattern,
                                pretzel_component_oracle, pretzel_mosaic,
                                traditional_square_bound)
from knotmosaics.bracket import (bracket, bracket_skein, determinant,
                                 jones_polynomial, normalized_bracket)
from knotmosaics.census import (OCC_ROW_OR_COL, CensusQuery, census,
                                enumerate_mosaics, layout_census,
                                max_crossings_empirical,
                                max_marking_relaxation, min_tiles)
from knotmosaics.diagram import pd_code
from knotmosaics.grid import (Mosaic, canonical_form, crossing_count, orbit,
                              parse, transform_mosaic, validate)
from knotmosaics.knot_table import classify, reference_table
from knotmosaics.laurent import Laurent, delta
from knotmosaics.tiles import ALL_OPS, Family
from knotmosaics.trace import trace

from conftest import TREFOIL_A, TREFOIL_B

FOUR_MOSAIC_KNOTS = {"3_1", "4_1", "5_1", "5_2", "6_1", "7_1", "7_2"}


# -- criterion 1: the trefoil is the only knot on a 3-mosaic -----------------

def test_three_mosaic_census():
    s = census(CensusQuery(Family.CORNER, 3, 3, min_crossings=3,
                           require_single_component=True,
                           require_prime_table_knot=True))
    assert s.knot_names() == {"3_1"}
    assert min_tiles("3_1", Family.CORNER, 3) == 8
    assert min_tiles("4_1", Family.CORNER, 3) is None


# -- criterion 2: the two 3-mosaic layouts -----------------------------------

def test_three_mosaic_layouts():
    rows = layout_census(CensusQuery(Family.CORNER, 3, 3, min_crossings=3))
    assert sorted(nb for _, nb, _ in rows) == [8, 9]


# -- criterion 3: the 4-mosaic knot census -----------------------------------

def test_four_mosaic_census():
    s = census(CensusQuery(Family.CORNER, 4, 4, min_crossings=3,
                           require_single_component=True,
                           require_prime_table_knot=True))
    assert s.knot_names() == FOUR_MOSAIC_KNOTS
    want = {"3_1": 8, "4_1": 11, "5_1": 10, "5_2": 11,
            "6_1": 13, "7_1": 12, "7_2": 14}
    for name, tiles in want.items():
        assert min_tiles(name, Family.CORNER, 4) == tiles, name


# -- criterion 4: the 4-mosaic layout multiset -------------------------------

def _four_mosaic_layout_counts():
    rows = layout_census(CensusQuery(Family.CORNER, 4, 4, min_crossings=4,
                                     occupancy_filter=OCC_ROW_OR_COL))
    return sorted(nb for _, nb, _ in rows)


@pytest.mark.xfail(
    strict=True,
    reason="the published multiset includes two layouts realizable only by "
           "links, which a knot-record census cannot produce, and the "
           "exhaustive search finds an extra 11-tile skeleton carrying a "
           "reduced figure-eight diagram; see docs/divergences.md")
def test_four_mosaic_layout_multiset_published():
    assert _four_mosaic_layout_counts() == [10, 11, 12, 12, 13, 13, 14]


def test_four_mosaic_layout_multiset_computed():
    # pins the exhaustive result so regressions surface
    counts = _four_mosaic_layout_counts()
    assert counts == [10, 11, 11, 12, 13, 13, 14, 14, 14, 14, 14]


# -- criterion 5 (extended): 7_2 needs only 13 tiles on a 5-mosaic -----------

@pytest.mark.extended
def test_seven_two_at_thirteen_tiles():
    s = census(CensusQuery(Family.CORNER, 5, 5, max_non_blank=13,
                           min_crossings=7, require_single_component=True,
                           require_prime_table_knot=True))
    assert "7_2" in s.knot_names()
    best = min(ks.min_non_blank for ks in s.stats_for("7_2"))
    assert best == 13
    assert best < min_tiles("7_2", Family.CORNER, 4)


# -- criterion 6 (extended): nothing new fits in 12 tiles on a 5-mosaic ------

@pytest.mark.extended
def test_budget_twelve_emptiness():
    # a record with c crossing tiles depicts a knot of crossing number at
    # most c, and every knot outside the 4-mosaic set has at least 6
    # crossings, so the floor of 6 discards only records that cannot
    # violate emptiness
    s = census(CensusQuery(Family.CORNER, 5, 5, max_non_blank=12,
                           min_crossings=6, require_single_component=True,
                           require_prime_table_knot=True))
    assert s.knot_names() <= FOUR_MOSAIC_KNOTS


# -- criterion 7: crossing maxima --------------------------------------------

def test_crossing_maxima_empirical():
    assert max_crossings_empirical(Family.CORNER, 3) == 4 == \
        corner_square_bound(3)
    assert max_crossings_empirical(Family.CORNER, 4) == 8 == \
        corner_square_bound(4)


@pytest.mark.parametrize("n", range(3, 13))
def test_max_pattern_attains_bound(n):
    m = max_pattern(n)
    rep = validate(m)
    assert rep.valid
    assert rep.crossings == corner_square_bound(n)


@pytest.mark.parametrize("n", range(3, 10))
def test_relaxation_agrees_with_formula(n):
    relax = max_marking_relaxation(n, n)
    assert relax >= max_crossings_empirical(Family.CORNER, n) \
        if n <= 4 else True
    assert relax == corner_square_bound(n), \
        f"relaxation gap at n={n}: {relax} vs {corner_square_bound(n)}"


# -- criterion 8: bound tables -----------------------------------------------

def test_bound_tables():
    assert [corner_square_bound(n) for n in range(3, 13)] == \
        [4, 8, 13, 18, 26, 32, 43, 50, 64, 72]
    for m in range(3, 9):
        for n in range(3, 9):
            b = corner_rect_bound(m, n)
            assert b == corner_rect_bound(n, m)
            if m % 2 == 0 and n % 2 == 0:
                assert b == m * n // 2
    assert [traditional_square_bound(n) for n in range(4, 13)] == \
        [3, 7, 13, 23, 31, 47, 57, 79, 91]
    assert corner_square_bound(9) == 43
    assert traditional_square_bound(9) == 47


# -- criterion 9 (extended): a knot on a traditional 9-mosaic that no
#    corner 9-mosaic can hold ------------------------------------------------

@pytest.mark.extended
def test_counterexample():
    rep = counterexample_check()
    assert rep.holds
    assert rep.crossing_number >= 44
    assert rep.corner_bound == 43
    d = rep.weave.diagram
    assert d.components() == 1
    assert d.is_reduced() and d.is_alternating() and d.is_connected()
    assert "at least 10" in rep.conclusion()


# -- criterion 10: invariant suites ------------------------------------------

def test_disjoint_unknot_multiplier():
    alone = pd_code(trace(parse(TREFOIL_A)))
    both = pd_code(trace(parse(
        "corner 5 3\n6 7 5\n9 0 9\n5 10 6\n2 0 0\n1 0 0\n")))
    assert bracket(both) == bracket(alone) * delta()


def test_trefoil_presentation_independence():
    fa = normalized_bracket(pd_code(trace(parse(TREFOIL_A))))
    fb = normalized_bracket(pd_code(trace(parse(TREFOIL_B))))
    assert fa == fb


def test_mirror_relation():
    pd = pd_code(trace(parse(TREFOIL_A)))
    pdm = pd_code(trace(parse(TREFOIL_A).mirror()))
    assert normalized_bracket(pdm) == normalized_bracket(pd).mirror()


def test_state_sum_matches_skein():
    from knotmosaics.knot_table import load_reference_pd_codes
    for name, (pd, _) in load_reference_pd_codes().items():
        if pd.n_crossings <= 10:
            assert bracket(pd) == bracket_skein(pd), name


def test_euler_on_census_diagrams():
    checked = 0
    for m in enumerate_mosaics(CensusQuery(Family.CORNER, 3, 3,
                                           min_crossings=1)):
        d = trace(m)
        if d.n_crossings and d.is_connected():
            assert d.euler_check()
            checked += 1
    assert checked > 100


def test_validity_under_symmetry_random():
    rng = random.Random(20260826)
    for _ in range(1000):
        n = rng.choice([3, 4])
        cells = tuple(rng.randrange(11) for _ in range(n * n))
        m = Mosaic(Family.CORNER, n, n, cells)
        valid = validate(m).valid
        for op in ALL_OPS:
            assert validate(transform_mosaic(m, op)).valid == valid


def test_canonical_idempotent_and_orbit_constant():
    rng = random.Random(7)
    for _ in range(200):
        cells = tuple(rng.randrange(11) for _ in range(9))
        m = Mosaic(Family.CORNER, 3, 3, cells)
        canon = canonical_form(m)
        assert canonical_form(canon) == canon
        assert all(canonical_form(o) == canon for o in orbit(m))


def test_reference_polynomials_distinct():
    table = reference_table()
    assert len(table) == 37
    names = sorted(table)
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            assert table[a] != table[b] and table[a] != table[b].mirror()


def test_jones_trefoil():
    f = reference_table()["3_1"]
    v = jones_polynomial(f)
    mirrored = jones_polynomial(f.mirror())
    want = {frozenset({(-4, -1), (-3, 1), (-1, 1)}),
            frozenset({(4, -1), (3, 1), (1, 1)})}
    assert {frozenset(v.coeffs().items()),
            frozenset(mirrored.coeffs().items())} == want
    assert determinant(f) == 3


# -- criterion 11: pretzel mosaics -------------------------------------------

def test_pretzel_negative_two_three_seven():
    m = pretzel_mosaic([-2, 3, 7])
    rep = validate(m)
    assert rep.valid
    assert crossing_count(m) == 12
    assert trace(m).components() == 1 == pretzel_component_oracle([-2, 3, 7])


def test_pretzel_trefoil():
    m = pretzel_mosaic([1, 1, 1])
    assert validate(m).valid
    assert classify(trace(m)).name == "3_1"
