"""Link diagrams as 4-valent plane graphs with a rotation system.

A diagram holds crossings, each with four strand-end slots numbered 0..3 in
counterclockwise order (as drawn on screen), an edge involution pairing the
slots, and a count of crossing-free closed loops.  The strand through slots
(0, 2) and the strand through slots (1, 3) are the two passages of the
crossing; ``over`` records which of the two is the over-strand.

Everything downstream (PD codes, writhe, faces, the Kauffman bracket) is
computed from this structure, whether it came from tracing a mosaic or from
a braid/tangle construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field

Port = tuple[int, int]  # (crossing index, slot 0..3)


@dataclass(frozen=True)
class Crossing:
    over: int  # 0 if the (0,2) strand is over, 1 if the (1,3) strand is
    site: tuple | None = None  # originating mosaic cell, when traced


class DiagramError(ValueError):
    pass


@dataclass
class Diagram:
    crossings: list[Crossing]
    link: dict[Port, Port]  # edge involution on ports
    free_loops: int = 0

    def __post_init__(self):
        ports = {(i, s) for i in range(len(self.crossings)) for s in range(4)}
        if set(self.link) != ports:
            raise DiagramError("every slot of every crossing must be wired")
        for p, q in self.link.items():
            if self.link.get(q) != p or p == q:
                raise DiagramError("port wiring must be a fixed-point-free involution")

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    # -- traversal ---------------------------------------------------------

    def _oriented_components(self) -> list[list[Port]]:
        """Components as sequences of departing ports, deterministically oriented.

        Each component starts at its smallest port, taken as departing; the
        walk alternates edge and pass-through-crossing steps.
        """
        seen: set[Port] = set()
        comps: list[list[Port]] = []
        for i in range(len(self.crossings)):
            for s in range(4):
                start = (i, s)
                if start in seen:
                    continue
                walk: list[Port] = []
                p = start
                while True:
                    # p departs; its arrival port and the continuation port
                    # are consumed by the same pass.
                    q = self.link[p]
                    cont = (q[0], (q[1] + 2) % 4)
                    if p in seen:
                        break
                    seen.add(p)
                    seen.add(q)
                    walk.append(p)
                    p = cont
                    if p == start:
                        break
                comps.append(walk)
        return comps

    def components(self) -> int:
        return len(self._oriented_components()) + self.free_loops

    def passes_of(self, walk: list[Port]) -> list[bool]:
        """Over/under flags (True = over) along one oriented component."""
        out = []
        for p in walk:
            q = self.link[p]
            out.append(self.crossings[q[0]].over == q[1] % 2)
        return out

    def is_alternating(self) -> bool:
        if not self.crossings:
            return True
        for walk in self._oriented_components():
            flags = self.passes_of(walk)
            for a, b in zip(flags, flags[1:] + flags[:1]):
                if a == b:
                    return False
        return True

    def is_connected(self) -> bool:
        if self.free_loops:
            return self.n_crossings == 0 and self.free_loops == 1
        if not self.crossings:
            return False
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for s in range(4):
                j = self.link[(i, s)][0]
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == len(self.crossings)

    # -- faces -------------------------------------------------------------

    def faces(self) -> list[list[Port]]:
        """Face walks of the 4-valent plane graph, as lists of departing ports.

        The walk turns from the arrival port to the counterclockwise-next
        slot, which traces each face once.  Requires at least one crossing.
        """
        if not self.crossings:
            raise DiagramError("faces need at least one crossing")
        faces = []
        seen: set[Port] = set()
        for i in range(len(self.crossings)):
            for s in range(4):
                if (i, s) in seen:
                    continue
                walk = []
                p = (i, s)
                while p not in seen:
                    seen.add(p)
                    walk.append(p)
                    q = self.link[p]
                    p = (q[0], (q[1] + 1) % 4)
                faces.append(walk)
        return faces

    def euler_check(self) -> bool:
        """V - E + F = 2 for a connected diagram with crossings."""
        if not self.is_connected() or not self.crossings:
            raise DiagramError("Euler check needs a connected diagram with crossings")
        v = self.n_crossings
        e = 2 * self.n_crossings
        f = len(self.faces())
        return v - e + f == 2

    def _quadrant_faces(self) -> dict[tuple[int, int], int]:
        """Face id at each crossing quadrant (i, q) between slots q and q+1."""
        out: dict[tuple[int, int], int] = {}
        for fid, walk in enumerate(self.faces()):
            for p in walk:
                q = self.link[p]
                # the face turns at q[0] through the quadrant between the
                # arrival slot and the ccw-next slot it departs from
                out[(q[0], q[1])] = fid
        return out

    def nugatory_crossings(self) -> list[int]:
        """Crossings where one face meets two opposite quadrants."""
        if not self.crossings:
            return []
        qf = self._quadrant_faces()
        bad = []
        for i in range(len(self.crossings)):
            f = [qf[(i, q)] for q in range(4)]
            if f[0] == f[2] or f[1] == f[3]:
                bad.append(i)
        return bad

    def is_reduced(self) -> bool:
        return not self.nugatory_crossings()

    def mirror(self) -> "Diagram":
        return Diagram([Crossing(1 - c.over, c.site) for c in self.crossings],
                       dict(self.link), self.free_loops)


@dataclass(frozen=True)
class KmtCertificate:
    """Kauffman-Murasugi-Thistlethwaite witness: a connected, reduced,
    alternating diagram realizes its crossing count as the crossing number."""

    crossing_number: int


def kmt_certificate(d: Diagram) -> KmtCertificate | None:
    if (d.n_crossings > 0 and d.is_connected() and d.is_reduced()
            and d.is_alternating()):
        return KmtCertificate(d.n_crossings)
    return None


# -- PD codes ---------------------------------------------------------------

@dataclass
class PDCode:
    """Planar-diagram code: per crossing a 4-tuple of arc labels listed
    counterclockwise from the incoming under-strand arc, plus crossing
    signs and component data from the traversal that labeled the arcs."""

    tuples: list[tuple[int, int, int, int]]
    signs: list[int]
    components: int
    free_loops: int = 0

    @property
    def n_crossings(self) -> int:
        return len(self.tuples)

    def writhe(self) -> int:
        return sum(self.signs)

    def render(self) -> str:
        return "\n".join("X(%d,%d,%d,%d)" % t for t in self.tuples) + "\n"


def pd_code(d: Diagram) -> PDCode:
    """Extract the PD code of a diagram with at least one crossing."""
    if not d.crossings:
        raise DiagramError("PD codes need at least one crossing")
    comps = d._oriented_components()
    out_label: dict[Port, int] = {}
    in_label: dict[Port, int] = {}
    label = 0
    for walk in comps:
        for p in walk:
            label += 1
            out_label[p] = label
            in_label[d.link[p]] = label
    tuples = []
    signs = []
    for i, cr in enumerate(d.crossings):
        under_pair = (1, 3) if cr.over == 0 else (0, 2)
        under_in = next(s for s in under_pair if (i, s) in in_label)
        over_pair = (0, 2) if cr.over == 0 else (1, 3)
        over_out = next(s for s in over_pair if (i, s) in out_label)
        under_out = (under_in + 2) % 4
        signs.append(1 if under_out == (over_out + 1) % 4 else -1)
        labels = []
        for k in range(4):
            s = (under_in + k) % 4
            labels.append(in_label[(i, s)] if (i, s) in in_label else out_label[(i, s)])
        tuples.append(tuple(labels))
    return PDCode(tuples, signs, len(comps) + d.free_loops, d.free_loops)


class DiagramBuilder:
    """Incremental construction of diagrams for braids and tangles."""

    def __init__(self):
        self.crossings: list[Crossing] = []
        self.link: dict[Port, Port] = {}
        self.free_loops = 0

    def add_crossing(self, over: int, site: tuple | None = None) -> int:
        self.crossings.append(Crossing(over, site))
        return len(self.crossings) - 1

    def connect(self, p: Port, q: Port) -> None:
        if p in self.link or q in self.link or p == q:
            raise DiagramError(f"bad wiring {p} <-> {q}")
        self.link[p] = q
        self.link[q] = p

    def add_free_loop(self, n: int = 1) -> None:
        self.free_loops += n

    def build(self) -> Diagram:
        return Diagram(self.crossings, self.link, self.free_loops)
