"""Deterministic SVG rendering of mosaics.

Each tile arc becomes one stroked <path>: a quadratic curve for arcs
between adjacent connection points (control point at the cell center for
corner tiles, at the shared cell corner for traditional quarter turns)
and a straight segment for diagonals and straight-through strands.  At a
crossing the under strand is split into two sub-paths leaving a gap
around the cell center.  Invalid mosaics still render, with every
offending connection site highlighted.
"""

from __future__ import annotations

from .grid import Mosaic, validate
from .tiles import Family, _OFFSET

CELL = 40.0
MARGIN = 20.0
GAP = 6.0

_GRID_STYLE = 'stroke="#ccc" stroke-width="1"'
_ARC_STYLE = 'stroke="#000" stroke-width="2.5" fill="none" stroke-linecap="round"'
_BAD_STYLE = 'fill="none" stroke="#c00" stroke-width="2"'


def _fmt(x: float) -> str:
    s = f"{x:.2f}"
    return s.rstrip("0").rstrip(".") if "." in s else s


def _endpoint_xy(r: int, c: int, e: str) -> tuple[float, float]:
    dr, dc = _OFFSET[e]
    return (MARGIN + (c + dc / 2) * CELL, MARGIN + (r + dr / 2) * CELL)


_ADJACENT_CONTROL = {
    # traditional quarter turns bend around the corner between the midpoints
    frozenset(("N", "E")): (0, 2), frozenset(("E", "S")): (2, 2),
    frozenset(("S", "W")): (2, 0), frozenset(("W", "N")): (0, 0),
}

_STRAIGHT = {frozenset(("NW", "SE")), frozenset(("NE", "SW")),
             frozenset(("N", "S")), frozenset(("E", "W"))}


def _arc_path(r: int, c: int, pair: frozenset) -> str:
    a, b = sorted(pair)
    (x1, y1), (x2, y2) = _endpoint_xy(r, c, a), _endpoint_xy(r, c, b)
    if pair in _STRAIGHT:
        return f"M {_fmt(x1)} {_fmt(y1)} L {_fmt(x2)} {_fmt(y2)}"
    ctrl = _ADJACENT_CONTROL.get(pair)
    if ctrl is not None:
        cr, cc = ctrl
        cx = MARGIN + (c + cc / 2) * CELL
        cy = MARGIN + (r + cr / 2) * CELL
    else:
        cx = MARGIN + (c + 0.5) * CELL
        cy = MARGIN + (r + 0.5) * CELL
    return (f"M {_fmt(x1)} {_fmt(y1)} Q {_fmt(cx)} {_fmt(cy)} "
            f"{_fmt(x2)} {_fmt(y2)}")


def _under_path(r: int, c: int, pair: frozenset) -> str:
    """The straight under strand as two sub-paths stopped short of center."""
    a, b = sorted(pair)
    (x1, y1), (x2, y2) = _endpoint_xy(r, c, a), _endpoint_xy(r, c, b)
    cx, cy = (x1 + x2) / 2, (y1 + y2) / 2
    half = ((x2 - x1) ** 2 + (y2 - y1) ** 2) ** 0.5 / 2
    t = GAP / half
    gx1, gy1 = cx + (x1 - cx) * t, cy + (y1 - cy) * t
    gx2, gy2 = cx + (x2 - cx) * t, cy + (y2 - cy) * t
    return (f"M {_fmt(x1)} {_fmt(y1)} L {_fmt(gx1)} {_fmt(gy1)} "
            f"M {_fmt(gx2)} {_fmt(gy2)} L {_fmt(x2)} {_fmt(y2)}")


def _site_xy(m: Mosaic, site) -> tuple[float, float]:
    if m.family is Family.CORNER:
        r, c = site
        return (MARGIN + c * CELL, MARGIN + r * CELL)
    kind, r, c = site
    if kind == "h":
        return (MARGIN + (c + 0.5) * CELL, MARGIN + r * CELL)
    return (MARGIN + c * CELL, MARGIN + (r + 0.5) * CELL)


def render_svg(m: Mosaic) -> str:
    w = m.cols * CELL + 2 * MARGIN
    h = m.rows * CELL + 2 * MARGIN
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(w)}" '
           f'height="{_fmt(h)}" viewBox="0 0 {_fmt(w)} {_fmt(h)}">']
    for r in range(m.rows + 1):
        y = MARGIN + r * CELL
        out.append(f'<line x1="{_fmt(MARGIN)}" y1="{_fmt(y)}" '
                   f'x2="{_fmt(MARGIN + m.cols * CELL)}" y2="{_fmt(y)}" '
                   f'{_GRID_STYLE}/>')
    for c in range(m.cols + 1):
        x = MARGIN + c * CELL
        out.append(f'<line x1="{_fmt(x)}" y1="{_fmt(MARGIN)}" '
                   f'x2="{_fmt(x)}" y2="{_fmt(MARGIN + m.rows * CELL)}" '
                   f'{_GRID_STYLE}/>')
    for r in range(m.rows):
        for c in range(m.cols):
            t = m.tile_at(r, c)
            for pair in sorted(t.matching, key=sorted):
                if t.is_crossing and pair != t.over:
                    d = _under_path(r, c, pair)
                else:
                    d = _arc_path(r, c, pair)
                out.append(f'<path d="{d}" {_ARC_STYLE}/>')
    for site, _deg in validate(m).offending_sites:
        x, y = _site_xy(m, site)
        out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="6" '
                   f'{_BAD_STYLE}/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
