"""Command-line front end: ``qmex expand | enumerate | table | verify``.

Exit codes: 0 success, 1 identity mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import combinatorics as comb
from . import special
from .combinatorics import StatKind
from .verify import DEFAULT_ENUM_BOUND, get_case, registry, check_case

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2
DEFAULT_ORDER = 100


class UsageError(Exception):
    pass


def _default_enum_bound() -> int:
    raw = os.environ.get("QMEX_MAX_ENUM")
    if raw is None:
        return DEFAULT_ENUM_BOUND
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"QMEX_MAX_ENUM must be an integer, got {raw!r}") from None


def _dump(payload, rows: list, columns: list, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow(["" if row[c] is None else row[c] for c in columns])
    return buf.getvalue()


# -- subcommands ----------------------------------------------------------------

def cmd_expand(args) -> tuple:
    try:
        builder = special.resolve(args.id)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    s = builder(args.order)
    coeffs = [str(c) for c in s.coeffs]
    payload = {"id": args.id, "order": s.order, "coefficients": coeffs}
    rows = [{"exponent": k, "coefficient": c} for k, c in enumerate(coeffs)]
    return EXIT_OK, _dump(payload, rows, ["exponent", "coefficient"], args.format)


def cmd_enumerate(args) -> tuple:
    kind = StatKind(args.stat) if args.stat else None
    if kind is not None and kind.odd and not args.odd:
        raise UsageError(f"--stat {kind.value} requires --odd")
    rows = []
    for p in comb.enumerate_overpartitions(args.n, odd_only=args.odd):
        row = {"overpartition": str(p), "weight": p.weight}
        if kind is not None:
            row["stat"] = kind.value
            row["value"] = comb.statistic(p, kind)
            row["restricted"] = comb.satisfies_restriction(p, kind)
        rows.append(row)
    columns = ["overpartition", "weight"] + (["stat", "value", "restricted"] if kind else [])
    payload = {"n": args.n, "odd_only": args.odd, "count": len(rows), "overpartitions": rows}
    if args.format == "csv":
        for row in rows:
            if "restricted" in row:
                row["restricted"] = str(row["restricted"]).lower()
    return EXIT_OK, _dump(payload, rows, columns, args.format)


TABLE_COLUMNS = {
    "mbar": (lambda n: comb.count_restricted(n, StatKind.OMEX), "thm1.rhs"),
    "mbar_o": (lambda n: comb.count_restricted(n, StatKind.OMOEX), "thm2.rhs"),
    "mtilde": (lambda n: comb.count_restricted(n, StatKind.TILDE_OMEX), "thm3.rhs"),
    "mtilde_o": (lambda n: comb.count_restricted(n, StatKind.TILDE_OMOEX), "thm4.rhs"),
    "sigma_omex": (comb.sigma_omex, "thm5.rhs"),
    "sigma_omoex_index": (comb.sigma_omoex_index, "thm6.rhs"),
}


def cmd_table(args) -> tuple:
    bound = args.enum_bound if args.enum_bound is not None else _default_enum_bound()
    if args.max_n < 0:
        raise UsageError("--max-n must be non-negative")
    if args.max_n > bound:
        raise UsageError(f"--max-n {args.max_n} exceeds the enumeration bound {bound}")
    stats = args.stats.split(",") if args.stats else list(TABLE_COLUMNS)
    unknown = [s for s in stats if s not in TABLE_COLUMNS]
    if unknown:
        raise UsageError(f"unknown stats {unknown}; choose from {list(TABLE_COLUMNS)}")
    series = {s: special.build(TABLE_COLUMNS[s][1], args.max_n) for s in stats}
    rows = []
    for n in range(args.max_n + 1):
        row = {"n": n}
        for s in stats:
            enum_value = TABLE_COLUMNS[s][0](n)
            series_value = series[s].coefficient(n)
            row[f"{s}_enum"] = str(enum_value)
            row[f"{s}_series"] = str(series_value)
            row[f"{s}_agree"] = enum_value == series_value
        rows.append(row)
    columns = ["n"] + [f"{s}_{part}" for s in stats for part in ("enum", "series", "agree")]
    payload = {"max_n": args.max_n, "stats": stats, "rows": rows}
    code = EXIT_OK if all(r[f"{s}_agree"] for r in rows for s in stats) else EXIT_MISMATCH
    if args.format == "csv":
        rows = [{k: (str(v).lower() if isinstance(v, bool) else v) for k, v in r.items()}
                for r in rows]
    return code, _dump(payload, rows, columns, args.format)


def cmd_verify(args) -> tuple:
    bound = args.enum_bound if args.enum_bound is not None else _default_enum_bound()
    if args.order < 0 or bound < 0:
        raise UsageError("--order and --enum-bound must be non-negative")
    if args.case == "all":
        cases = registry()
    else:
        try:
            cases = [get_case(args.case)]
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
    reports = [check_case(c, args.order, bound) for c in cases]
    dicts = [r.to_dict(timing=not args.no_timing) for r in reports]
    ok = all(r.passed for r in reports)
    payload = {
        "order": args.order,
        "enum_bound": bound,
        "status": "pass" if ok else "fail",
        "reports": dicts,
    }
    rows = []
    for d in dicts:
        mm = d["first_mismatch"] or {}
        rows.append({
            "name": d["name"],
            "compared_order": d["compared_order"],
            "status": d["status"],
            "mismatch_exponent": mm.get("exponent"),
            "mismatch_lhs": mm.get("lhs"),
            "mismatch_rhs": mm.get("rhs"),
            "elapsed_ms": d["elapsed_ms"],
        })
    columns = ["name", "compared_order", "status", "mismatch_exponent",
               "mismatch_lhs", "mismatch_rhs", "elapsed_ms"]
    return (EXIT_OK if ok else EXIT_MISMATCH), _dump(payload, rows, columns, args.format)


def cmd_list(args) -> tuple:
    names = [c.name for c in registry()] if args.what == "cases" else list(special.FIXED_IDS)
    return EXIT_OK, "\n".join(names) + "\n"


# -- parser ---------------------------------------------------------------------

def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qmex", description="Overpartition mex statistics and their q-series identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("expand", help="print coefficients of a named series")
    p.add_argument("id")
    p.add_argument("--order", type=_nonneg, default=DEFAULT_ORDER)
    fmt(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("enumerate", help="list overpartitions of n")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--odd", action="store_true", help="odd parts only")
    p.add_argument("--stat", choices=[k.value for k in StatKind])
    fmt(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("table", help="enumeration counts next to series coefficients")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--stats", help="comma-separated subset of " + ",".join(TABLE_COLUMNS))
    p.add_argument("--enum-bound", type=_nonneg)
    fmt(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="check one identity case or all of them")
    p.add_argument("case", nargs="?", default="all")
    p.add_argument("--order", type=_nonneg, default=DEFAULT_ORDER)
    p.add_argument("--enum-bound", type=_nonneg)
    p.add_argument("--no-timing", action="store_true",
                   help="emit elapsed_ms as null for byte-stable output")
    fmt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("list", help="list series ids or identity cases")
    p.add_argument("what", choices=("ids", "cases"))
    p.set_defaults(func=cmd_list)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, text = args.func(args)
    except UsageError as exc:
        print(f"qmex: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
