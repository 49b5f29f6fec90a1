import itertools

import pytest

from knotmosaics.tiles import (ALL_OPS, FLIP_H, IDENTITY, RECT_OPS, ROT90,
                               ROT180, ROT270, SQUARE_OPS, Family, catalog,
                               mirror_code, tile, transform_tile)


def test_catalog_shape():
    for family in Family:
        cat = catalog(family)
        assert len(cat) == 11
        assert [t.code for t in cat] == list(range(11))
        assert cat[0].is_blank
        assert [t.is_crossing for t in cat] == [False] * 9 + [True, True]


def test_endpoint_usage_counts():
    # 1 blank, 6 single arcs, 4 tiles using all four connection points
    for family in Family:
        uses = sorted(len(t.endpoints_used()) for t in catalog(family))
        assert uses == [0] + [2] * 6 + [4] * 4


def test_group_closure_and_inverses():
    assert len(ALL_OPS) == 8
    for a, b in itertools.product(ALL_OPS, repeat=2):
        assert a.compose(b) in ALL_OPS
    for a in ALL_OPS:
        assert a.compose(a.inverse()) == IDENTITY
        assert a.inverse().compose(a) == IDENTITY


def test_rotations_compose():
    assert ROT90.compose(ROT90) == ROT180
    assert ROT180.compose(ROT90) == ROT270
    assert ROT270.compose(ROT90) == IDENTITY


def test_op_subsets():
    assert set(SQUARE_OPS) == set(ALL_OPS)
    assert all(not op.transpose for op in RECT_OPS)
    assert len(RECT_OPS) == 4


@pytest.mark.parametrize("family", list(Family))
def test_transform_is_group_action(family):
    for op1, op2 in itertools.product(ALL_OPS, repeat=2):
        for t in catalog(family):
            once = transform_tile(transform_tile(t, op2), op1)
            composed = transform_tile(t, op1.compose(op2))
            assert once == composed


@pytest.mark.parametrize("family", list(Family))
def test_transform_permutes_catalog(family):
    for op in ALL_OPS:
        images = {transform_tile(t, op).code for t in catalog(family)}
        assert images == set(range(11))


def test_crossing_codes_under_symmetry():
    # a half turn fixes each crossing tile; a quarter turn carries the
    # over strand onto the other diagonal/axis and so swaps the codes
    for family in Family:
        for code in (9, 10):
            assert transform_tile(tile(family, code), ROT180).code == code
            assert transform_tile(tile(family, code), ROT90).code == 19 - code
    # a left-right flip swaps the corner diagonals but fixes the
    # traditional N-S / E-W axes
    assert transform_tile(tile(Family.CORNER, 9), FLIP_H).code == 10
    assert transform_tile(tile(Family.TRADITIONAL, 9), FLIP_H).code == 9


def test_mirror_code():
    assert [mirror_code(c) for c in range(11)] == list(range(9)) + [10, 9]
