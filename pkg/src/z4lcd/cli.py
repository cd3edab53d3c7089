"""Command-line frontend.

Subcommands: factor, classify, hull, enumerate-lcd, count-lcd, verify.
Every command takes --json for machine-readable output (canonical key
order, integers only); the default is a human-readable rendering that
displays polynomials in signed form (3 printed as -1).

Exit codes: 0 on success, 1 when `verify` finds a mismatch, 2 for usage
and validation errors.

Polynomial arguments are comma-separated ascending coefficient strings
("3,1" is X-1, "1" is the constant 1); factor-id lists are given with an
ids: prefix ("ids:0,2").  A JSON config file ({"max_bruteforce": M}) can
set the default brute-force bound for `verify`.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import codes, cyclotomic, lcdenum
from .z4poly import Z4Poly, format_terms

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """Validation failure that should exit with the usage code."""


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _parse_divisor_arg(text: str, table: cyclotomic.FactorTable) -> codes.DivisorSet:
    """Resolve an --f/--g argument: ids:... list or a coefficient string."""
    text = text.strip()
    if text.startswith("ids:"):
        body = text[4:].strip()
        try:
            ids = [int(part) for part in body.split(",")] if body else []
        except ValueError as exc:
            raise UsageError(f"bad id list {text!r}") from exc
        try:
            return codes.DivisorSet.of(table, ids)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    try:
        poly = Z4Poly.from_string(text)
    except ValueError as exc:
        raise UsageError(f"bad coefficient string {text!r}") from exc
    try:
        return codes.factor_divisor(poly, table)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _odd_length(value: int) -> int:
    if value < 1:
        raise UsageError("N must be positive")
    if value % 2 == 0:
        raise UsageError("N must be odd")
    return value


def cmd_factor(args) -> int:
    length = _odd_length(args.N)
    table = cyclotomic.build_factor_table(length)
    if args.json:
        _emit_json(cyclotomic.table_to_wire(table))
        return EXIT_OK
    product = "".join(f"({format_terms(r.poly)})" for r in table.records)
    print(f"X^{length}-1 = {product}")
    for r in table.records:
        label = cyclotomic.factor_label(r)
        coset = "{" + ",".join(str(s) for s in r.coset) + "}"
        print(
            f"  {label:<8} = {format_terms(r.poly):<24} "
            f"coeffs={r.poly.to_string():<16} n={r.divisor:<3} coset={coset}"
        )
    return EXIT_OK


def cmd_classify(args) -> int:
    length = _odd_length(args.N)
    divisors = [n for n in range(1, length + 1) if length % n == 0]
    classes = [cyclotomic.classify_pair(n) for n in divisors]
    if args.json:
        rows = []
        for pc in classes:
            row = {"n": pc.divisor, "phi": pc.phi, "ord2": pc.order2, "kind": pc.kind}
            if pc.gamma is not None:
                row["gamma"] = pc.gamma
            if pc.beta is not None:
                row["beta"] = pc.beta
            rows.append(row)
        _emit_json({"N": length, "divisors": rows})
        return EXIT_OK
    for pc in classes:
        count = f"gamma={pc.gamma}" if pc.kind == cyclotomic.GOOD else f"beta={pc.beta}"
        print(f"n={pc.divisor}: {pc.kind}  phi={pc.phi} ord2={pc.order2} {count}")
    return EXIT_OK


def cmd_hull(args) -> int:
    length = _odd_length(args.N)
    table = cyclotomic.build_factor_table(length)
    f_set = _parse_divisor_arg(args.f, table)
    g_set = _parse_divisor_arg(args.g, table)
    if f_set.members & g_set.members:
        raise UsageError("f and g overlap")
    spec = codes.CodeSpec.of(table, f_set.members, g_set.members)
    report = codes.hull_report(spec)
    if args.json:
        _emit_json(codes.hull_to_wire(report))
        return EXIT_OK

    def part(ds):
        if not ds.members:
            return "1"
        return "".join(cyclotomic.factor_label(table[i]) for i in sorted(ds.members))

    print(f"f={part(spec.f_set)} g={part(spec.g_set)} h={part(spec.h_set)}")
    print(
        f"degH={report.deg_H} degG={report.deg_G} "
        f"hullSize={report.hull_size} lcd={'yes' if report.lcd else 'no'}"
    )
    return EXIT_OK


def cmd_enumerate_lcd(args) -> int:
    length = _odd_length(args.N)
    catalog = lcdenum.enumerate_lcd(length)
    if args.json:
        _emit_json(lcdenum.catalog_to_wire(catalog))
        return EXIT_OK
    print(f"N={length} nsrf={catalog.nsrf} count={len(catalog.entries)}")
    for entry in catalog.entries:
        label = lcdenum.entry_label(entry)
        print(f"  {label:<24} generator={entry.generator.to_string()}")
    return EXIT_OK


def cmd_count_lcd(args) -> int:
    length = _odd_length(args.N)
    nsrf = lcdenum.count_nsrf(length)
    if args.json:
        _emit_json({"N": length, "nsrf": nsrf, "count": 2**nsrf})
        return EXIT_OK
    print(f"N={length} nsrf={nsrf} count={2 ** nsrf}")
    return EXIT_OK


def cmd_verify(args) -> int:
    from . import oracle  # numpy import deferred to the one command that needs it

    length = _odd_length(args.N)
    bound = args.max_bruteforce
    if bound is None:
        bound = _config_bound(args.config)
    if bound is None:
        bound = oracle.DEFAULT_BOUND
    try:
        report = oracle.sweep_verify(length, bound)
    except oracle.BruteForceBoundError as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        _emit_json(oracle.sweep_to_wire(report))
    else:
        print(
            f"N={length}: {report.partitions} partitions, "
            f"{len(report.mismatches)} mismatches, {report.lcd_count} LCD"
        )
        for m in report.mismatches:
            print(f"  MISMATCH {codes.spec_to_wire(m.spec)}: "
                  f"expected {m.expected}, got {m.got}")
    return EXIT_OK if report.ok else EXIT_MISMATCH


def _config_bound(path: str | None) -> int | None:
    if not path:
        return None
    try:
        with open(path) as handle:
            config = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path!r}: {exc}") from exc
    bound = config.get("max_bruteforce")
    if bound is not None and not isinstance(bound, int):
        raise UsageError("config max_bruteforce must be an integer")
    return bound


def build_parser() -> argparse.ArgumentParser:
    # subcommand copies default to SUPPRESS so they do not clobber the
    # global flags when the subparser merges its namespace back
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON"
    )
    common.add_argument(
        "--config", metavar="PATH", default=argparse.SUPPRESS, help="JSON config file"
    )

    parser = argparse.ArgumentParser(
        prog="z4lcd",
        description="Cyclic codes over Z4: factorization, hulls, LCD enumeration.",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON")
    parser.add_argument("--config", metavar="PATH", default=None, help="JSON config file")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor", parents=[common], help="factor X^N-1 over Z4")
    p.add_argument("N", type=int)
    p.set_defaults(run=cmd_factor)

    p = sub.add_parser("classify", parents=[common], help="good/bad pairs per divisor")
    p.add_argument("N", type=int)
    p.set_defaults(run=cmd_classify)

    p = sub.add_parser("hull", parents=[common], help="hull size of the code (fg, 2f)")
    p.add_argument("N", type=int)
    p.add_argument("--f", default="1", help="divisor f: coefficients or ids:...")
    p.add_argument("--g", default="1", help="divisor g: coefficients or ids:...")
    p.set_defaults(run=cmd_hull)

    p = sub.add_parser("enumerate-lcd", parents=[common], help="list all LCD codes")
    p.add_argument("N", type=int)
    p.set_defaults(run=cmd_enumerate_lcd)

    p = sub.add_parser("count-lcd", parents=[common], help="count LCD codes")
    p.add_argument("N", type=int)
    p.set_defaults(run=cmd_count_lcd)

    p = sub.add_parser("verify", parents=[common], help="brute-force sweep check")
    p.add_argument("N", type=int)
    p.add_argument("--max-bruteforce", type=int, metavar="M",
                   help="raise the brute-force length bound")
    p.set_defaults(run=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
