"""Tracing a valid mosaic into its underlying link diagram.

Arc endpoints of adjacent tiles meet at shared lattice vertices (corner
family) or edge midpoints (traditional family).  Following arcs through
those meeting points partitions the drawing into closed curves; crossing
tiles become the 4-valent vertices of the diagram, with slots numbered in
counterclockwise screen order.

Slot order at a crossing cell:
    corner family      0=NE, 1=NW, 2=SW, 3=SE   (over NW-SE  -> slots (1,3))
    traditional family 0=E,  1=N,  2=W,  3=S    (over N-S    -> slots (1,3))
"""

from __future__ import annotations

from .diagram import Diagram, DiagramBuilder
from .grid import Mosaic, validate
from .tiles import Family

_SLOTS = {
    Family.CORNER: ("NE", "NW", "SW", "SE"),
    Family.TRADITIONAL: ("E", "N", "W", "S"),
}

End = tuple[int, int, str]  # (row, col, endpoint name)


def _meeting_site(family: Family, r: int, c: int, e: str):
    if family is Family.CORNER:
        return (r + (e in ("SW", "SE")), c + (e in ("NE", "SE")))
    if e in ("N", "S"):
        return ("h", r + (e == "S"), c)
    return ("v", r, c + (e == "E"))


def _external_pairing(m: Mosaic) -> dict[End, End]:
    sites: dict[tuple, list[End]] = {}
    for r in range(m.rows):
        for c in range(m.cols):
            for e in m.tile_at(r, c).endpoints_used():
                sites.setdefault(_meeting_site(m.family, r, c, e), []).append((r, c, e))
    pairing: dict[End, End] = {}
    for ends in sites.values():
        if len(ends) != 2:
            raise ValueError("mosaic is not suitably connected")
        a, b = ends
        pairing[a] = b
        pairing[b] = a
    return pairing


def trace(m: Mosaic) -> Diagram:
    """Diagram of a valid mosaic (raises ValueError when invalid)."""
    report = validate(m)
    if not report.valid:
        raise ValueError(f"invalid mosaic: {len(report.offending_sites)} bad sites")
    slots = _SLOTS[m.family]
    slot_index = {e: i for i, e in enumerate(slots)}
    pairing = _external_pairing(m)

    builder = DiagramBuilder()
    port_of: dict[End, tuple[int, int]] = {}
    arc_partner: dict[End, End] = {}  # within non-crossing tiles
    for r in range(m.rows):
        for c in range(m.cols):
            t = m.tile_at(r, c)
            if t.is_crossing:
                # over pair NW-SE / N-S occupies slots (1, 3)
                over = 1 if slots[1] in t.over else 0
                ci = builder.add_crossing(over, site=(r, c))
                for e in slots:
                    port_of[(r, c, e)] = (ci, slot_index[e])
            else:
                for pair in t.matching:
                    a, b = tuple(pair)
                    arc_partner[(r, c, a)] = (r, c, b)
                    arc_partner[(r, c, b)] = (r, c, a)

    visited: set[End] = set()

    def walk_to_port(start: End) -> End | None:
        """Follow plain arcs from a crossing exit until the next crossing
        entry; returns None when the path closes into a free loop."""
        cur = pairing[start]
        while cur not in port_of:
            visited.add(cur)
            nxt = arc_partner[cur]
            visited.add(nxt)
            cur = pairing[nxt]
            if cur == start:
                return None
        return cur

    for end, port in port_of.items():
        if end in visited:
            continue
        visited.add(end)
        other = walk_to_port(end)
        assert other is not None  # a path out of a crossing must re-enter one
        visited.add(other)
        builder.connect(port, port_of[other])

    # closed curves that never meet a crossing
    for end in list(arc_partner):
        if end in visited:
            continue
        cur = end
        while cur not in visited:
            visited.add(cur)
            nxt = arc_partner[cur]
            visited.add(nxt)
            cur = pairing[nxt]
        builder.add_free_loop()

    return builder.build()


def component_count_unionfind(m: Mosaic) -> int:
    """Independent component count via union-find over tile arcs.

    Oracle for Diagram.components(): merges arcs across meeting sites and
    inside tiles, then counts classes of strand passages.
    """
    parent: dict[End, End] = {}

    def find(x: End) -> End:
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: End, b: End):
        parent[find(a)] = find(b)

    for r in range(m.rows):
        for c in range(m.cols):
            for pair in m.tile_at(r, c).matching:
                a, b = tuple(pair)
                union((r, c, a), (r, c, b))
    for a, b in _external_pairing(m).items():
        union(a, b)
    roots = {find((r, c, e))
             for r in range(m.rows) for c in range(m.cols)
             for e in m.tile_at(r, c).endpoints_used()}
    return len(roots)
