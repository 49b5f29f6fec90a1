"""Reference polynomial table and bracket-based knot classification.

The table covers the unknot, every prime knot through 8 crossings, and
9_1.  Reference diagrams come from two sources that cross-check each
other: explicit construction recipes (braid closures, two-bridge
vectors, Conway tangle sums) and a frozen data file of PD codes with the
expected normalized bracket for each entry.  Loading the data file
recomputes every polynomial and refuses to proceed on any mismatch, so
a drifted bracket implementation fails loudly instead of misclassifying.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from . import constructions as cons
from .bracket import normalized_bracket
from .diagram import Diagram, PDCode, pd_code
from .laurent import Laurent

AS_TABLE = "as-table"
MIRRORED = "mirrored"
AMPHICHIRAL = "amphichiral"

_DATA_FILE = "reference_pd_codes.txt"


def _braid(word):
    return "closure of the 3-braid " + " ".join(
        ("s%d" % w if w > 0 else "s%d'" % -w) for w in word
    ), (lambda: cons.braid_closure(list(word)))


def _two_bridge(vector):
    return "two-bridge knot, Conway vector %r" % (vector,), (
        lambda: cons.rational_knot(vector)
    )


def _tangle_sum(tokens):
    return "Conway tangle sum %r" % (tokens,), (lambda: cons.conway_sum(list(tokens)))


# name -> (provenance, diagram factory); every entry re-derivable from
# scratch, nothing hand-entered beyond these construction parameters.
RECIPES: dict[str, tuple[str, object]] = {
    "unknot": ("one-crossing kink; normalized bracket is 1",
               lambda: cons.braid_closure([1], strands=2)),
    "3_1": _braid((1, 1, 1)),
    "4_1": _two_bridge((2, 2)),
    "5_1": _braid((1,) * 5),
    "5_2": _two_bridge((3, 2)),
    "6_1": _two_bridge((4, 2)),
    "6_2": _two_bridge((3, 1, 2)),
    "6_3": _two_bridge((2, 1, 1, 2)),
    "7_1": _braid((1,) * 7),
    "7_2": _two_bridge((5, 2)),
    "7_3": _two_bridge((4, 3)),
    "7_4": _two_bridge((3, 1, 3)),
    "7_5": _two_bridge((3, 2, 2)),
    "7_6": _two_bridge((2, 2, 1, 2)),
    "7_7": _two_bridge((2, 1, 1, 1, 2)),
    "8_1": _two_bridge((6, 2)),
    "8_2": _two_bridge((5, 1, 2)),
    "8_3": _two_bridge((4, 4)),
    "8_4": _two_bridge((4, 1, 3)),
    "8_5": _tangle_sum(((3,), (3,), (2,))),
    "8_6": _two_bridge((3, 3, 2)),
    "8_7": _two_bridge((4, 1, 1, 2)),
    "8_8": _two_bridge((2, 3, 1, 2)),
    "8_9": _two_bridge((3, 1, 1, 3)),
    "8_10": _tangle_sum(((3,), (2, 1), (2,))),
    "8_11": _two_bridge((3, 2, 1, 2)),
    "8_12": _two_bridge((2, 2, 2, 2)),
    "8_13": _two_bridge((3, 1, 1, 1, 2)),
    "8_14": _two_bridge((2, 2, 1, 1, 2)),
    "8_15": _tangle_sum(((2, 1), (2, 1), (2,))),
    "8_16": _braid((1, 1, -2, 1, 1, -2, 1, -2)),
    "8_17": _braid((1, 1, -2, 1, -2, 1, -2, -2)),
    "8_18": _braid((1, -2, 1, -2, 1, -2, 1, -2)),
    "8_19": _tangle_sum(((3,), (3,), (-2,))),
    "8_20": _tangle_sum(((3,), (2, 1), (-2,))),
    "8_21": _tangle_sum(((2, 1), (2, 1), (-2,))),
    "9_1": _braid((1,) * 9),
}

KNOT_NAMES: tuple[str, ...] = tuple(RECIPES)


def reference_diagram(name: str) -> Diagram:
    """Build the table's reference diagram for ``name`` from its recipe."""
    return RECIPES[name][1]()


def render_reference_data() -> str:
    """Regenerate the frozen data file's content from the recipes."""
    lines = [
        "# Reference PD codes for the classification table.",
        "# Arcs are numbered along an oriented traversal; each X tuple lists",
        "# the four arcs counterclockwise from the incoming under-strand.",
        "# Format: name  X(...)...  signs=<+/- per crossing>  f=<normalized bracket>",
        "",
    ]
    for name, (provenance, factory) in RECIPES.items():
        pd = pd_code(factory())
        f = normalized_bracket(pd)
        xs = " ".join("X(%d,%d,%d,%d)" % t for t in pd.tuples)
        sg = "".join("+" if s > 0 else "-" for s in pd.signs)
        lines.append("# %s: %s" % (name, provenance))
        lines.append("%s %s signs=%s f=%s" % (name, xs, sg, f))
    return "\n".join(lines) + "\n"


_LINE = re.compile(
    r"^(?P<name>\S+)\s+(?P<xs>(?:X\(\d+,\d+,\d+,\d+\)\s+)+)"
    r"signs=(?P<signs>[+-]+)\s+f=(?P<f>.+)$"
)


@lru_cache(maxsize=1)
def load_reference_pd_codes() -> dict[str, tuple[PDCode, str]]:
    """Parse the frozen data file; verify each stored polynomial by
    recomputing it from the stored PD code."""
    text = resources.files(__package__).joinpath("data").joinpath(_DATA_FILE).read_text()
    out: dict[str, tuple[PDCode, str]] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _LINE.match(line)
        if m is None:
            raise ValueError("bad reference table line: %r" % line)
        tuples = [tuple(int(x) for x in g.split(","))
                  for g in re.findall(r"X\(([\d,]+)\)", m["xs"])]
        signs = [1 if c == "+" else -1 for c in m["signs"]]
        if len(signs) != len(tuples):
            raise ValueError("sign count mismatch for %s" % m["name"])
        pd = PDCode(tuples, signs, components=1)
        recomputed = str(normalized_bracket(pd))
        if recomputed != m["f"]:
            raise ValueError(
                "stale reference polynomial for %s: stored %s, recomputed %s"
                % (m["name"], m["f"], recomputed))
        out[m["name"]] = (pd, m["f"])
    missing = set(RECIPES) - set(out)
    if missing:
        raise ValueError("reference table missing entries: %s" % sorted(missing))
    return out


@lru_cache(maxsize=1)
def reference_table() -> dict[str, Laurent]:
    """name -> normalized bracket polynomial, recomputed from frozen PD codes."""
    return {name: normalized_bracket(pd)
            for name, (pd, _) in load_reference_pd_codes().items()}


@dataclass(frozen=True)
class KnotId:
    """Classification result.

    ``name`` is a table name, ``Link(k)`` for a k-component input, or
    ``Unknown`` when the polynomial misses the table (in which case
    ``polynomial`` carries it for reporting).
    """

    name: str
    mirror_flag: str
    crossing_count_of_diagram: int
    polynomial: Laurent | None = None

    @property
    def is_knot(self) -> bool:
        return self.name not in ("Unknown",) and not self.name.startswith("Link")

    def __str__(self) -> str:
        if self.mirror_flag == MIRRORED:
            return self.name + "*"
        return self.name


def classify(d: Diagram) -> KnotId:
    """Identify a single-component diagram by normalized bracket lookup."""
    nc = len(d.crossings)
    k = d.components()
    if k != 1:
        return KnotId("Link(%d)" % k, AMPHICHIRAL, nc)
    if nc == 0:
        return KnotId("unknot", AMPHICHIRAL, 0)
    f = normalized_bracket(pd_code(d))
    if f == Laurent.one():
        return KnotId("unknot", AMPHICHIRAL, nc)
    table = reference_table()
    for name, ref in table.items():
        if f == ref:
            flag = AMPHICHIRAL if ref == ref.mirror() else AS_TABLE
            return KnotId(name, flag, nc)
        if f == ref.mirror():
            return KnotId(name, MIRRORED, nc)
    return KnotId("Unknown", AMPHICHIRAL, nc, polynomial=f)
