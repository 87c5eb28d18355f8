"""Command-line front end.

Subcommands: compute, generate, max-value, verify, table, enumerate.
Exit codes are a stable contract for CI use: 0 success/verified, 1
verification or internal consistency failure, 2 usage or parse errors.
All output is deterministic for a given set of flags.
"""

import argparse
import os
import sys
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from functools import partial

from .extremal import (
    max_value_closed,
    max_value_even_recursion,
    max_value_recursive,
    verify_extremal,
)
from .families import caterpillar, echelon, fully_balanced
from .newick import NewickDocument, NewickError, parse_newick, write_newick
from .shapes import DEFAULT_ENUM_BOUND, count_shapes, enumerate_shapes
from .stairs2 import stairs2_direct, stairs2_recursive
from .tree import canonical

TABLE_RANGE_CAP = 10**6


@dataclass(frozen=True)
class TableRow:
    """One line of the maximum-value table; the exact string is authoritative."""

    n: int
    value_exact: str
    value_decimal: str


def decimal_string(value: Fraction, digits: int = 10) -> str:
    """Render an exact rational to ``digits`` significant decimal digits.

    Rounding is half-even; trailing zeros are kept so the width is stable
    (1 renders as "1.000000000" at the default ten digits).  Zero renders
    as plain "0".
    """
    if digits < 1:
        raise ValueError("need at least one significant digit")
    if value == 0:
        return "0"
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_HALF_EVEN
        d = Decimal(value.numerator) / Decimal(value.denominator)
        return str(d.quantize(Decimal((0, (1,), d.adjusted() - digits + 1))))


def _fmt(value: Fraction, digits: int = 10) -> str:
    return f"{value} ({decimal_string(value, digits)})"


def _enum_bound() -> int:
    raw = os.environ.get("TREEBALANCE_MAX_ENUM")
    if raw is None:
        return DEFAULT_ENUM_BOUND
    try:
        return int(raw)
    except ValueError:
        raise ValueError("TREEBALANCE_MAX_ENUM must be an integer") from None


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def cmd_compute(args) -> int:
    doc = parse_newick(_read_input(args.input))
    if args.method == "direct":
        print(_fmt(stairs2_direct(doc.shape)))
        return 0
    if args.method == "recursive":
        print(_fmt(stairs2_recursive(doc.shape)))
        return 0
    direct = stairs2_direct(doc.shape)
    recursive = stairs2_recursive(doc.shape)
    print(f"direct: {_fmt(direct)}")
    print(f"recursive: {_fmt(recursive)}")
    if direct != recursive:
        print("error: direct and recursive values disagree", file=sys.stderr)
        return 1
    return 0


def cmd_generate(args) -> int:
    if args.shape == "fb":
        if args.h is None:
            raise ValueError("--shape fb requires --h")
        tree = fully_balanced(args.h)
    else:
        if args.n is None:
            raise ValueError(f"--shape {args.shape} requires --n")
        if args.n < 1:
            raise ValueError("need at least one leaf (the empty tree has no Newick form)")
        tree = echelon(args.n) if args.shape == "echelon" else caterpillar(args.n)
    print(write_newick(NewickDocument(tree)))
    return 0


def cmd_max_value(args) -> int:
    if args.n < 1:
        raise ValueError("need at least one leaf")
    if args.method == "recursive":
        print(_fmt(max_value_recursive(args.n)))
        return 0
    if args.method == "closed":
        print(_fmt(max_value_closed(args.n)))
        return 0
    if args.method == "even":
        print(_fmt(max_value_even_recursion(args.n)))
        return 0
    results = [
        ("recursive", max_value_recursive(args.n)),
        ("closed", max_value_closed(args.n)),
    ]
    if args.n >= 2 and args.n % 2 == 0:
        results.append(("even", max_value_even_recursion(args.n)))
    for name, value in results:
        print(f"{name}: {_fmt(value)}")
    if len({value for _, value in results}) != 1:
        print("error: the formulas disagree", file=sys.stderr)
        return 1
    return 0


def _flag(ok: bool) -> str:
    return "ok" if ok else "FAIL"


def cmd_verify(args) -> int:
    bound = _enum_bound()
    if args.max_n < 2 or args.max_n > bound:
        raise ValueError(f"--max-n must be between 2 and {bound}")
    jobs = args.jobs if args.jobs is not None else (os.cpu_count() or 1)
    ns = range(2, args.max_n + 1)
    if jobs > 1 and len(ns) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=min(jobs, len(ns))) as pool:
            reports = list(pool.map(partial(verify_extremal, bound=bound), ns))
    else:
        reports = [verify_extremal(n, bound=bound) for n in ns]

    all_ok = True
    for r in sorted(reports, key=lambda r: r.n):
        ok = (
            r.max_unique_and_is_echelon
            and r.min_unique_and_is_caterpillar
            and r.subtree_maximality_holds
        )
        all_ok = all_ok and ok
        print(
            f"n={r.n} shapes={r.shape_count} max={_fmt(r.max_value)} "
            f"echelon_max={_flag(r.max_unique_and_is_echelon)} "
            f"caterpillar_min={_flag(r.min_unique_and_is_caterpillar)} "
            f"subtree_max={_flag(r.subtree_maximality_holds)}"
        )
    if all_ok:
        print(f"verified: all checks passed for n=2..{args.max_n}")
        return 0
    print(f"FAILED: at least one check failed for n=2..{args.max_n}", file=sys.stderr)
    return 1


def cmd_table(args) -> int:
    lo, hi = args.from_n, args.to_n
    if not (1 <= lo <= hi <= TABLE_RANGE_CAP):
        raise ValueError(f"need 1 <= from <= to <= {TABLE_RANGE_CAP}")
    sep = {"csv": ",", "tsv": "\t", "plain": " "}[args.format]
    if args.format != "plain":
        print(sep.join(("n", "st2_max_exact", "st2_max_decimal")))
    for n in range(lo, hi + 1):
        value = max_value_recursive(n)
        if value != max_value_closed(n):
            print(f"error: recursive and closed formulas disagree at n={n}", file=sys.stderr)
            return 1
        row = TableRow(n, str(value), decimal_string(value, args.precision))
        print(sep.join((str(row.n), row.value_exact, row.value_decimal)))
    return 0


def cmd_enumerate(args) -> int:
    if args.emit_newick:
        bound = _enum_bound()
        shapes = sorted(enumerate_shapes(args.n, bound), key=canonical)
        for shape in shapes:
            print(write_newick(NewickDocument(shape)))
        return 0
    print(count_shapes(args.n).count)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treebalance",
        description="Exact stairs2 balance index computations on rooted binary trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="index of a Newick tree (file or '-' for stdin)")
    p.add_argument("input", nargs="?", default="-", help="Newick file path, or - for stdin")
    p.add_argument(
        "--method", choices=("direct", "recursive", "both"), default="direct",
        help="evaluation route; 'both' cross-checks and fails on mismatch",
    )
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("generate", help="emit a named tree family as Newick")
    p.add_argument("--shape", choices=("echelon", "fb", "caterpillar"), required=True)
    p.add_argument("--n", type=int, help="leaf count (echelon, caterpillar)")
    p.add_argument("--h", type=int, help="height (fb)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("max-value", help="maximum index value for a leaf count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--method", choices=("recursive", "closed", "even", "all"), default="recursive",
        help="'all' evaluates every applicable formula and fails on mismatch",
    )
    p.set_defaults(func=cmd_max_value)

    p = sub.add_parser("verify", help="brute-force extremal verification per leaf count")
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    p.add_argument("--jobs", type=int, default=None, help="parallel workers (default: all cores)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="maximum-value table over a range of leaf counts")
    p.add_argument("--from", type=int, required=True, dest="from_n")
    p.add_argument("--to", type=int, required=True, dest="to_n")
    p.add_argument("--format", choices=("csv", "tsv", "plain"), default="csv")
    p.add_argument("--precision", type=int, default=10, help="significant decimal digits")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("enumerate", help="count or list all shapes for a leaf count")
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--count-only", action="store_true", help="print the shape count (default)")
    group.add_argument("--emit-newick", action="store_true", help="print one Newick line per shape")
    p.set_defaults(func=cmd_enumerate)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NewickError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
