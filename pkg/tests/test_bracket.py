import pytest

from knotmosaics.bracket import (MAX_CROSSINGS, BracketLimitError, bracket,
                                 bracket_skein, determinant,
                                 jones_polynomial, normalized_bracket)
from knotmosaics.constructions import braid_closure, rational_knot
from knotmosaics.diagram import PDCode, pd_code
from knotmosaics.knot_table import load_reference_pd_codes
from knotmosaics.laurent import Laurent, delta
from knotmosaics.trace import trace


def _pd(m):
    return pd_code(trace(m))


def test_unknot_bracket():
    assert bracket(PDCode([], [], 1, free_loops=1)) == Laurent.one()


def test_disjoint_unknot_multiplier():
    # each extra split unknotted loop multiplies the bracket by delta
    base = pd_code(braid_closure([1, 1, 1]))
    with_loop = PDCode(base.tuples, base.signs, base.components + 2,
                       free_loops=2)
    assert bracket(with_loop) == bracket(base) * delta() ** 2
    assert bracket_skein(with_loop) == bracket_skein(base) * delta() ** 2


def test_state_sum_matches_skein_on_references():
    for name, (pd, _prov) in load_reference_pd_codes().items():
        if pd.n_crossings <= 10:
            assert bracket(pd) == bracket_skein(pd), name


def test_state_sum_matches_skein_on_mosaics(trefoil_a, trefoil_mirror_9):
    for m in (trefoil_a, trefoil_mirror_9):
        pd = _pd(m)
        assert bracket(pd) == bracket_skein(pd)


def test_normalized_bracket_equal_across_trefoil_mosaics(trefoil_a,
                                                          trefoil_b):
    assert normalized_bracket(_pd(trefoil_a)) \
        == normalized_bracket(_pd(trefoil_b))


def test_mirror_relation(trefoil_a, trefoil_mirror_9):
    f = normalized_bracket(_pd(trefoil_a))
    g = normalized_bracket(_pd(trefoil_mirror_9))
    assert g == f.mirror()
    assert f != g  # the trefoil is chiral


def test_mirror_relation_via_mosaic_mirror(trefoil_a):
    f = normalized_bracket(_pd(trefoil_a))
    assert normalized_bracket(_pd(trefoil_a.mirror())) == f.mirror()


def test_trefoil_jones():
    # V(3_1) = -t^-4 + t^-3 + t^-1 for the reference chirality
    f = normalized_bracket(pd_code(rational_knot((3,))))
    v = jones_polynomial(f)
    assert v in (Laurent({-4: -1, -3: 1, -1: 1}),
                 Laurent({4: -1, 3: 1, 1: 1}))
    assert determinant(f) == 3


def test_figure_eight_is_amphichiral():
    f = normalized_bracket(pd_code(rational_knot((2, 2))))
    assert f == f.mirror()
    assert determinant(f) == 5


def test_writhe_invariance_of_normalization():
    # the two 3_1 braid presentations with different writhes agree
    f1 = normalized_bracket(pd_code(braid_closure([1, 1, 1])))
    f2 = normalized_bracket(pd_code(rational_knot((3,))))
    assert f1 == f2


def test_crossing_limit():
    n = MAX_CROSSINGS + 1
    pd = PDCode([(1, 2, 3, 4)] * n, [1] * n, 1)
    with pytest.raises(BracketLimitError):
        bracket(pd)
