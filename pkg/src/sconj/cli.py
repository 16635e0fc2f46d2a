"""Command-line front end.

Exit codes: 0 success, 1 a verification found a counterexample, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .diagram import from_partition
from .involution import involute_trace
from .oracle import joint_distribution, verify_gf, verify_involution
from .partitions import (
    DomainError,
    c_stat,
    check_remainder_vector,
    format_partition,
    parse_partition,
    r_stat,
    remainder_sequence,
    row_positions,
    s_cells,
)
from .qseries import gf_closed, gf_sum_form


def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise DomainError(f"not a comma-separated list of integers: {text!r}") from None


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _emit(record: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(record) + "\n")
        return
    width = max(len(k) for k in record)
    for key, value in record.items():
        if isinstance(value, (list, tuple)) and key != "s_cells":
            value = ",".join(map(str, value))
        elif key == "s_cells":
            value = " ".join(f"({i},{j})" for i, j in value)
        out.write(f"{key.ljust(width)}  {value}\n")


def cmd_stats(args, out) -> int:
    p = parse_partition(args.partition)
    s = args.s
    record = {
        "partition": list(p),
        "size": p.size,
        "length": p.length,
        "r": r_stat(p, s),
        "c": c_stat(p, s),
        "rem": list(remainder_sequence(p, s)),
        "row_positions": list(row_positions(p, s)),
        "s_cells": [list(z) for z in s_cells(p, s)],
    }
    _emit(record, args.format, out)
    return 0


def cmd_apply(args, out) -> int:
    p = parse_partition(args.partition)
    s = args.s
    trace = involute_trace(p, s)
    image = trace.output
    if args.format == "plain":
        out.write(format_partition(image) + "\n")
        return 0
    record = {
        "input": list(p),
        "output": list(image),
        "rc_before": [r_stat(p, s), c_stat(p, s)],
        "rc_after": [r_stat(image, s), c_stat(image, s)],
    }
    if args.format == "json":
        if args.trace:
            record["trace"] = trace.render().split("\n")
        out.write(json.dumps(record) + "\n")
        return 0
    out.write(f"input   {format_partition(p)}\n")
    out.write(f"output  {format_partition(image)}\n")
    out.write(f"(r,c)   ({record['rc_before'][0]},{record['rc_before'][1]})"
              f" -> ({record['rc_after'][0]},{record['rc_after'][1]})\n")
    if args.trace:
        out.write("\n" + trace.render() + "\n")
    return 0


def cmd_gf(args, out) -> int:
    rv = check_remainder_vector(_int_list(args.rem), args.s)
    if args.sum_form:
        if args.max_degree is None:
            raise DomainError("--sum-form needs --max-degree")
        poly = gf_sum_form(args.s, rv, args.max_degree)
    else:
        if args.r is None or args.c is None:
            raise DomainError("--r and --c are required unless --sum-form is given")
        poly = gf_closed(args.s, rv, args.r, args.c)
    if args.json:
        out.write(json.dumps(poly.to_json()) + "\n")
    else:
        out.write(str(poly) + "\n")
    return 0


def cmd_table(args, out) -> int:
    dist = joint_distribution(args.n, args.s, args.jobs)
    if args.group_by == "none":
        merged = {}
        for _, r, c, count in dist.rows():
            merged[(r, c)] = merged.get((r, c), 0) + count
        rows = [("*", r, c, count) for (r, c), count in sorted(merged.items())]
    else:
        rows = [("-".join(map(str, rv)), r, c, count) for rv, r, c, count in dist.rows()]
    if args.format == "json":
        if args.group_by == "none":
            entries = [{"r": r, "c": c, "count": k} for _, r, c, k in rows]
            out.write(json.dumps({"n": args.n, "s": args.s, "entries": entries}) + "\n")
        else:
            out.write(dist.to_json() + "\n")
    else:
        out.write("rem,r,c,count\n")
        for rem, r, c, count in rows:
            out.write(f"{rem},{r},{c},{count}\n")
    return 0


def cmd_verify(args, out) -> int:
    s_list = _int_list(args.s)
    if not s_list or min(s_list) < 1:
        raise DomainError("--s needs a list of positive integers")
    reports = []
    if args.suite in ("involution", "all"):
        reports.append(verify_involution(args.max_n, s_list, args.jobs))
    if args.suite in ("gf", "all"):
        for s in s_list:
            rep = verify_gf(args.max_n, s, args.jobs)
            rep.name = f"gf[s={s}]"
            reports.append(rep)
    ok = all(r.passed for r in reports)
    if args.json:
        out.write(json.dumps({"passed": ok, "reports": [r.to_dict() for r in reports]}) + "\n")
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            out.write(f"{status}  {r.name}: {r.checked} checks, {len(r.violations)} violations\n")
            for v in r.violations[:10]:
                out.write("      " + json.dumps(v) + "\n")
    return 0 if ok else 1


def cmd_render(args, out) -> int:
    p = parse_partition(args.partition)
    if args.what == "ferrers":
        text = "\n".join("#" * part for part in p)
    else:
        text = from_partition(p, args.s).render()
    if text:
        out.write(text + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sconj",
        description="Involutions on integer partitions swapping r_s and c_s.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="statistics of a partition")
    p.add_argument("--partition", required=True, help="comma-separated parts, '' for empty")
    p.add_argument("--s", type=_positive, default=1)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("apply", help="apply the involution")
    p.add_argument("--partition", required=True)
    p.add_argument("--s", type=_positive, default=1)
    p.add_argument("--trace", action="store_true", help="show the intermediate remainder diagrams")
    p.add_argument("--format", choices=["text", "json", "plain"], default="text")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("gf", help="generating-function polynomial")
    p.add_argument("--s", type=_positive, required=True)
    p.add_argument("--rem", default="", help="comma-separated remainder vector")
    p.add_argument("--r", type=_non_negative)
    p.add_argument("--c", type=_non_negative)
    p.add_argument("--sum-form", action="store_true", help="full series in q, R, C instead")
    p.add_argument("--max-degree", type=_non_negative)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("table", help="joint distribution of (rem, r, c) over partitions of n")
    p.add_argument("--n", type=_non_negative, required=True)
    p.add_argument("--s", type=_positive, default=1)
    p.add_argument("--group-by", choices=["rem", "none"], default="rem")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--jobs", type=_positive, default=1)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="exhaustive checks against brute-force enumeration")
    p.add_argument("--max-n", type=_non_negative, required=True)
    p.add_argument("--s", default="1,2,3")
    p.add_argument("--suite", choices=["involution", "gf", "all"], default="all")
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="ASCII Ferrers or remainder diagram")
    p.add_argument("--partition", required=True)
    p.add_argument("--s", type=_positive, default=1)
    p.add_argument("--what", choices=["ferrers", "diagram"], default="ferrers")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except DomainError as exc:
        sys.stderr.write(f"sconj {args.command}: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
