from knotmosaics.grid import parse
from knotmosaics.render import render_svg

from conftest import TREFOIL_A


def test_unknot_two_arcs(unknot_2):
    svg = render_svg(unknot_2)
    assert svg.startswith("<svg")
    assert svg.rstrip().endswith("</svg>")
    assert svg.count("<path") == 2
    assert svg.count("<circle") == 0


def test_trefoil_path_count(trefoil_a):
    # 4 corner arcs + 2 arcs on the double tile + 2 per crossing
    svg = render_svg(trefoil_a)
    assert svg.count("<path") == 12


def test_under_strand_is_split_path():
    m = parse("corner 3 3\n0 0 0\n0 0 0\n3 9 4\n")
    svg = render_svg(m)
    split = [p for p in svg.split("<path")[1:] if p.count("M ") == 2]
    assert len(split) == 1


def test_grid_lines_present(unknot_2):
    svg = render_svg(unknot_2)
    assert svg.count("<line") == 6


def test_invalid_sites_highlighted():
    svg = render_svg(parse("corner 2 2\n1 0\n0 0\n"))
    assert svg.count("<circle") == 2
    assert "#c00" in svg


def test_deterministic(trefoil_a):
    assert render_svg(trefoil_a) == render_svg(parse(TREFOIL_A))


def test_traditional_renders():
    m = parse("traditional 3 3\n2 1 0\n5 4 0\n0 0 0\n")
    svg = render_svg(m)
    assert svg.count("<path") >= 2


def test_quadratic_arcs_used(trefoil_a):
    assert " Q " in render_svg(trefoil_a)
