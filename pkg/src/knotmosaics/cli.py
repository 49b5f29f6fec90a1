"""Command-line surface.

Subcommands read ``.cmos`` mosaics from a file argument (``-`` for
standard input) where applicable and write results to standard output.
Exit codes: 0 success, 1 domain failure (invalid mosaic, failed check),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import (bound_report, max_pattern, pretzel_mosaic,
                     saturated_weave_traditional)
from .census import (CensusQuery, OCC_NONE, OCC_ROW_OR_COL, census,
                     layout_census)
from .diagram import pd_code
from .grid import (MosaicFormatError, crossing_count, non_blank_count, parse,
                   serialize, validate)
from .knot_table import classify
from .render import render_svg
from .tiles import Family
from .trace import trace
from .verify import FAIL, verify_all


class DomainFailure(Exception):
    pass


def _read_mosaic(path: str):
    data = sys.stdin.read() if path == "-" else open(path).read()
    return parse(data)


def _family(name: str) -> Family:
    return Family(name)


def _cmd_validate(args) -> None:
    m = _read_mosaic(args.mosaic)
    report = validate(m)
    if report.valid:
        print(f"valid: {report.non_blank} non-blank, "
              f"{report.crossings} crossings")
        return
    for site, deg in report.offending_sites:
        print(f"offending site {site}: degree {deg}")
    raise DomainFailure(f"{len(report.offending_sites)} offending sites")


def _cmd_trace(args) -> None:
    m = _read_mosaic(args.mosaic)
    d = trace(m)
    print(f"components: {d.components()}")
    print(f"crossings: {d.n_crossings}")
    if d.crossings:
        sys.stdout.write(pd_code(d).render())


def _cmd_classify(args) -> None:
    m = _read_mosaic(args.mosaic)
    k = classify(trace(m))
    print(f"{k} ({non_blank_count(m)} non-blank, "
          f"{crossing_count(m)} crossings)")
    if k.polynomial is not None:
        print(f"normalized bracket: {k.polynomial}")


def _census_query(args) -> CensusQuery:
    return CensusQuery(
        _family(args.family), args.n, args.n,
        max_non_blank=args.max_non_blank,
        min_crossings=args.min_crossings,
        require_single_component=args.single_component,
        require_prime_table_knot=args.prime,
        occupancy_filter=OCC_ROW_OR_COL if args.occupied else OCC_NONE)


def _cmd_census(args) -> None:
    s = census(_census_query(args))
    rows = [{"knot": name, "min_non_blank": ks.min_non_blank,
             "count": ks.count} for name, ks in sorted(s.per_knot.items())]
    if args.format == "json-lines":
        for row in rows:
            print(json.dumps(row, sort_keys=True))
        return
    print(f"records: {s.total_records}")
    for row in rows:
        print(f"{row['knot']}: min non-blank {row['min_non_blank']}, "
              f"count {row['count']}")


def _cmd_layouts(args) -> None:
    lay = layout_census(CensusQuery(Family.CORNER, args.n, args.n,
                                    occupancy_filter=OCC_ROW_OR_COL))
    for sk, nb, knots in lay:
        print(f"--- {nb} non-blank, knots {sorted(knots)}")
        print(sk.render())


def _cmd_bounds(args) -> None:
    m = args.m if args.m is not None else args.n
    rep = bound_report(_family(args.family), m, args.n)
    print(rep.bound)


def _cmd_pattern(args) -> None:
    sys.stdout.write(serialize(max_pattern(args.n)))


def _cmd_pretzel(args) -> None:
    sys.stdout.write(serialize(pretzel_mosaic(args.twists)))


def _cmd_weave(args) -> None:
    result = saturated_weave_traditional(args.n)
    sys.stdout.write(serialize(result.mosaic))
    print(f"certified crossing number: "
          f"{result.certificate.crossing_number}")


def _cmd_render(args) -> None:
    svg = render_svg(_read_mosaic(args.mosaic))
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)


def _cmd_verify(args) -> None:
    results = verify_all(args.tier)
    failed = False
    for res in results:
        failed = failed or res.status == FAIL
        if args.format == "json-lines":
            print(json.dumps({"check": res.check_id, "status": res.status,
                              "details": res.details,
                              "elapsed": round(res.elapsed, 2)},
                             sort_keys=True))
        else:
            print(f"[{res.status}] {res.check_id} "
                  f"({res.elapsed:.1f}s): {res.details}")
    n_pass = sum(1 for r in results if r.status == "pass")
    if args.format != "json-lines":
        print(f"{n_pass}/{len(results)} checks passed")
    if failed:
        raise DomainFailure("verification failed")


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="knotmosaics",
        description="Corner-connection knot mosaics toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def mosaic_cmd(name, fn, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("mosaic", help=".cmos file, or - for stdin")
        sp.set_defaults(fn=fn)
        return sp

    mosaic_cmd("validate", _cmd_validate, "check suitable connectivity")
    mosaic_cmd("trace", _cmd_trace, "trace a mosaic to its PD code")
    mosaic_cmd("classify", _cmd_classify, "identify the depicted knot")
    sp = mosaic_cmd("render", _cmd_render, "render a mosaic to SVG")
    sp.add_argument("-o", "--output", help="write SVG here instead of stdout")

    sp = sub.add_parser("census", help="exhaustive classified census")
    sp.add_argument("--family", choices=["corner", "traditional"],
                    default="corner")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--max-non-blank", type=int, default=None)
    sp.add_argument("--min-crossings", type=int, default=0)
    sp.add_argument("--single-component", action="store_true")
    sp.add_argument("--prime", action="store_true")
    sp.add_argument("--occupied", action="store_true",
                    help="keep only every-row-or-every-column mosaics")
    sp.add_argument("--format", choices=["text", "json-lines"],
                    default="text")
    sp.set_defaults(fn=_cmd_census)

    sp = sub.add_parser("layouts", help="space-efficient layout skeletons")
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(fn=_cmd_layouts)

    sp = sub.add_parser("bounds", help="closed-form crossing bound")
    sp.add_argument("--family", choices=["corner", "traditional"],
                    default="corner")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, default=None,
                    help="rows for rectangular corner bounds")
    sp.set_defaults(fn=_cmd_bounds)

    sp = sub.add_parser("pattern", help="maximal-crossing corner mosaic")
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(fn=_cmd_pattern)

    sp = sub.add_parser("pretzel", help="pretzel link mosaic")
    sp.add_argument("twists", type=int, nargs="+")
    sp.set_defaults(fn=_cmd_pretzel)

    sp = sub.add_parser("weave", help="saturated traditional weave")
    sp.add_argument("--n", type=int, default=9)
    sp.set_defaults(fn=_cmd_weave)

    sp = sub.add_parser("verify", help="run the theorem verification suite")
    sp.add_argument("--tier", choices=["required", "extended"],
                    default="required")
    sp.add_argument("--format", choices=["text", "json-lines"],
                    default="text")
    sp.set_defaults(fn=_cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        args.fn(args)
    except DomainFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (MosaicFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
