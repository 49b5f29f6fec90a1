import pytest
from hypothesis import given
from hypothesis import strategies as st

from knotmosaics.laurent import Laurent, delta

polys = st.builds(
    Laurent,
    st.dictionaries(st.integers(-8, 8), st.integers(-9, 9), max_size=6))


def test_constructors():
    assert Laurent.zero() == 0
    assert Laurent.one() == 1
    assert Laurent.monomial(3, -2).coeffs() == {3: -2}
    assert Laurent([(1, 2), (1, -2)]) == Laurent.zero()


def test_delta():
    assert delta().coeffs() == {2: -1, -2: -1}
    assert delta().is_palindromic()


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + Laurent.zero() == a
    assert a * Laurent.one() == a
    assert a - a == Laurent.zero()


@given(polys)
def test_mirror_involution(p):
    assert p.mirror().mirror() == p
    assert p.mirror().evaluate_unit(1) == p.evaluate_unit(1)
    assert p.span() == p.mirror().span()


@given(polys, st.integers(0, 5))
def test_pow_matches_repeated_product(p, n):
    expected = Laurent.one()
    for _ in range(n):
        expected = expected * p
    assert p ** n == expected


def test_negative_pow():
    assert Laurent.monomial(2) ** -3 == Laurent.monomial(-6)
    assert Laurent.monomial(1, -1) ** -1 == Laurent.monomial(-1, -1)
    with pytest.raises(ValueError):
        delta() ** -1


@given(polys, st.integers(-5, 5))
def test_shift(p, e):
    assert p.shift(e).shift(-e) == p
    assert p.shift(e) == p * Laurent.monomial(e)


@given(polys)
def test_evaluate_unit(p):
    assert p.evaluate_unit(1) == sum(p.coeffs().values())
    assert p.evaluate_unit(-1) == sum(
        k if e % 2 == 0 else -k for e, k in p.coeffs().items())


def test_str():
    assert str(Laurent.zero()) == "0"
    assert str(Laurent({0: -3})) == "-3"
    assert str(Laurent({-7: -1, -3: 1, 5: 1})) == "-A^-7 + A^-3 + A^5"
    assert str(Laurent({1: 2})) == "2*A"
