import pytest

from knotmosaics.census import CensusQuery, enumerate_mosaics
from knotmosaics.diagram import DiagramError, pd_code
from knotmosaics.grid import blank, parse
from knotmosaics.tiles import Family
from knotmosaics.trace import component_count_unionfind, trace


def test_trefoil_trace(trefoil_a):
    d = trace(trefoil_a)
    assert d.n_crossings == 3
    assert d.components() == 1
    assert d.is_connected()
    assert d.is_alternating()
    assert d.is_reduced()
    assert d.euler_check()


def test_unknot_trace(unknot_2):
    d = trace(unknot_2)
    assert d.n_crossings == 0
    assert d.free_loops == 1
    assert d.components() == 1


def test_blank_mosaic_traces_empty():
    d = trace(blank(Family.CORNER, 2, 2))
    assert d.components() == 0
    with pytest.raises(DiagramError):
        d.faces()


def test_invalid_raises():
    with pytest.raises(ValueError):
        trace(parse("corner 2 2\n1 0\n0 0\n"))


def test_two_component_link():
    # two stacked unknots
    m = parse("corner 4 2\n2 0\n1 0\n2 0\n1 0\n")
    d = trace(m)
    assert d.components() == 2
    assert not d.is_connected()


def test_hopf_link():
    m = parse("corner 3 3\n0 0 0\n6 9 5\n5 9 6\n")
    d = trace(m)
    assert d.components() == 2
    assert d.n_crossings == 2
    assert d.is_connected()
    assert d.is_alternating()


def test_nugatory_kink():
    # one crossing closed into a single kinked loop: not reduced
    m = parse("corner 3 3\n0 0 0\n0 0 0\n3 9 4\n")
    d = trace(m)
    assert d.components() == 1
    assert d.n_crossings == 1
    assert not d.is_reduced()


def test_component_count_matches_unionfind_exhaustively():
    q = CensusQuery(Family.CORNER, 3, 3)
    checked = 0
    for m in enumerate_mosaics(q):
        expected = component_count_unionfind(m)
        d = trace(m)
        assert d.components() == expected
        checked += 1
    assert checked > 100


def test_euler_formula_on_census():
    q = CensusQuery(Family.CORNER, 3, 3, min_crossings=1,
                    require_single_component=True)
    for m in enumerate_mosaics(q):
        d = trace(m)
        if d.is_connected() and d.crossings:
            assert d.euler_check()


def test_pd_code_well_formed(trefoil_a):
    pd = pd_code(trace(trefoil_a))
    assert pd.n_crossings == 3
    assert pd.components == 1
    labels = [x for t in pd.tuples for x in t]
    assert sorted(set(labels)) == [1, 2, 3, 4, 5, 6]
    # every arc label appears exactly twice across the crossing tuples
    assert all(labels.count(x) == 2 for x in set(labels))
    assert abs(pd.writhe()) == 3
