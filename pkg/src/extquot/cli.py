"""Command-line interface.

Exit codes: 0 success, 1 check failure, 2 usage error, 3 resource bound refusal.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .arith import parse_angle
from .cohomology import (
    DEFAULT_ORACLE_BOUND,
    betti_from_invariants,
    closed_form_total,
    graded_invariants,
    graded_invariants_oracle,
)
from .ktheory import ASSUMPTIONS, ktheory_ranks
from .labels import LocalFieldData, admissible_n, check_square
from .quotient import enumerate_components, fibre_cardinality, isotropy, membership, normalize, orbit_representative

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3
FORMATS = ("table", "json-records", "csv")
DEFAULT_MAX_POINTS = 1_000_000


class UsageError(Exception):
    pass


class BoundError(Exception):
    pass


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return " ".join(_cell(x) for x in v)
    return str(v)


def render(records: list[dict], fmt: str, footer: list[str] = ()) -> str:
    if fmt == "json-records":
        return "".join(json.dumps(r, separators=(",", ":")) + "\n" for r in records)
    columns = list(records[0]) if records else []
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for r in records:
            w.writerow([_cell(r.get(c)) for c in columns])
        return buf.getvalue()
    rows = [[_cell(r.get(c)) for c in columns] for r in records]
    widths = [max([len(c)] + [len(row[i]) for row in rows]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
    lines += ["  ".join(x.rjust(w) for x, w in zip(row, widths)) for row in rows]
    lines += list(footer)
    return "\n".join(lines) + "\n"


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def parse_point(spec: str):
    parts = spec.split(",")
    angles = []
    for pos, part in enumerate(parts, start=1):
        try:
            angles.append(parse_angle(part))
        except ValueError as exc:
            raise UsageError(f"malformed fraction at position {pos}: {exc}") from None
    return normalize(angles)


def cmd_components(args) -> tuple[list[dict], list[str], int]:
    records = []
    for c in enumerate_components(args.n):
        records.append({"n": c.n, "k": c.k, "omega": str(c.omega), "d": c.d, "g": c.g, "dim": c.dim})
    points = sum(1 for r in records if r["dim"] == 0)
    return records, [f"{len(records)} components, {points} isolated points"], EXIT_OK


def cmd_betti(args) -> tuple[list[dict], list[str], int]:
    n = args.n
    if args.oracle and n > args.oracle_bound:
        raise BoundError(f"oracle refused: n={n} exceeds --oracle-bound {args.oracle_bound}")
    a = graded_invariants(n)
    b = betti_from_invariants(a)
    g = closed_form_total(n)
    rec = {"n": n, "a": list(a.dims), "b": list(b.betti), "g": g, "g_half": g // 2}
    code = EXIT_OK
    if args.oracle:
        oracle = graded_invariants_oracle(n, bound=args.oracle_bound)
        rec["oracle_a"] = list(oracle.dims)
        rec["verdict"] = "match" if oracle == a else "mismatch"
        if oracle != a:
            code = EXIT_CHECK_FAILED
    return [rec], [], code


def cmd_ktheory(args) -> tuple[list[dict], list[str], int]:
    ranks = ktheory_ranks(args.n)
    rows = [
        {
            "n": r.component.n,
            "k": r.component.k,
            "omega": str(r.component.omega),
            "d": r.component.d,
            "g": r.component.g,
            "dim": r.component.dim,
            "h_ev": r.h_ev,
            "h_odd": r.h_odd,
        }
        for r in ranks.breakdown
    ]
    if args.format == "json-records":
        rows.append({"n": ranks.n, "k0": ranks.k0, "k1": ranks.k1})
        return rows, [], EXIT_OK
    if args.format == "csv":
        rows.append({"n": ranks.n, "k": "total", "h_ev": ranks.k0, "h_odd": ranks.k1})
        return rows, [], EXIT_OK
    return rows, [f"rank K0 = {ranks.k0}, rank K1 = {ranks.k1}", f"({ASSUMPTIONS})"], EXIT_OK


def cmd_isotropy(args) -> tuple[list[dict], list[str], int]:
    p = parse_point(args.point)
    order, gen = isotropy(p)
    rep = orbit_representative(p)
    memberships = []
    for k in range(1, p.n + 1):
        omega = membership(p, k % p.n)
        if omega is not None:
            memberships.append(f"X({p.n},{k},{omega})")
    rec = {
        "point": str(p),
        "n": p.n,
        "order": order,
        "generator": f"gamma^{gen.k}",
        "orbit_rep": str(rep),
        "fibre": fibre_cardinality(rep),
        "components": memberships,
    }
    return [rec], [], EXIT_OK


def cmd_sequence(args) -> tuple[list[dict], list[str], int]:
    records = []
    for n in range(1, args.limit + 1):
        g = closed_form_total(n)
        records.append({"n": n, "g": g, "g_half": g // 2})
    return records, [], EXIT_OK


def cmd_check(args) -> tuple[list[dict], list[str], int]:
    size = args.M ** (args.n - 1)
    if size > args.max_points:
        raise BoundError(f"lattice has {size} points, above --max-points {args.max_points}")
    report = check_square(args.n, args.M)
    footer = ["pass" if report.passed else "FAIL"] + report.failures[:10]
    return [report.record()], footer, EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_admissible(args) -> tuple[list[dict], list[str], int]:
    try:
        f = LocalFieldData(args.p, args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return [{"N": args.N, "p": args.p, "q": args.q, "admissible": admissible_n(args.N, f)}], [], EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="table")

    parser = argparse.ArgumentParser(
        prog="extquot",
        description="Extended quotients (T^n/T)//(Z/nZ), orbifold Betti numbers and K-theory ranks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("components", parents=[common], help="list the components X(n,k,omega)")
    p.add_argument("n", type=_positive_int)
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("betti", parents=[common], help="cyclic invariants a_j and Betti numbers of X(n)")
    p.add_argument("n", type=_positive_int)
    p.add_argument("--oracle", action="store_true", help="also run the brute-force subset oracle")
    p.add_argument("--oracle-bound", type=_positive_int, default=DEFAULT_ORACLE_BOUND)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("ktheory", parents=[common], help="ranks of K_0, K_1 with per-component breakdown")
    p.add_argument("n", type=_positive_int)
    p.set_defaults(func=cmd_ktheory)

    p = sub.add_parser("isotropy", parents=[common], help="isotropy and fibre of a rational point")
    p.add_argument("point", help='comma-separated angles, e.g. "0,1/3,2/3"')
    p.set_defaults(func=cmd_isotropy)

    p = sub.add_parser("sequence", parents=[common], help="table of g(n)/2")
    p.add_argument("--limit", type=_positive_int, default=18)
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("check", parents=[common], help="finite-model check of pi = inf.ch o mu")
    p.add_argument("n", type=_positive_int)
    p.add_argument("M", type=_positive_int)
    p.add_argument("--max-points", type=_positive_int, default=DEFAULT_MAX_POINTS)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("admissible", parents=[common], help="divisors n of N with a unit character of order n")
    p.add_argument("N", type=_positive_int)
    p.add_argument("p", type=_positive_int)
    p.add_argument("q", type=_positive_int)
    p.set_defaults(func=cmd_admissible)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        records, footer, code = args.func(args)
    except UsageError as exc:
        print(f"extquot {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BoundError as exc:
        print(f"extquot {args.command}: {exc}", file=sys.stderr)
        return EXIT_BOUND
    sys.stdout.write(render(records, args.format, footer if args.format == "table" else ()))
    return code


if __name__ == "__main__":
    sys.exit(main())
