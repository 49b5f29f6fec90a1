import pytest

from knotmosaics.grid import parse

# the two same-chirality 3x3 trefoil mosaics (8 and 9 non-blank)
TREFOIL_A = "corner 3 3\n6 7 5\n9 0 9\n5 10 6\n"
TREFOIL_B = "corner 3 3\n6 1 5\n9 1 9\n5 10 6\n"

# 9-tile mosaic of the opposite-chirality trefoil
TREFOIL_MIRROR_9 = "corner 3 3\n6 1 5\n9 9 9\n5 2 6\n"

UNKNOT_2 = "corner 2 2\n2 0\n1 0\n"


@pytest.fixture
def trefoil_a():
    return parse(TREFOIL_A)


@pytest.fixture
def trefoil_b():
    return parse(TREFOIL_B)


@pytest.fixture
def trefoil_mirror_9():
    return parse(TREFOIL_MIRROR_9)


@pytest.fixture
def unknot_2():
    return parse(UNKNOT_2)
