"""Command-line front end.

    mzr classify -- n1 ... nr
    mzr reduce [--pivot leftmost|rightmost|j=K] [--format json|latex|plain] [--trace] -- n1 ... nr
    mzr eval [--N INT] [--cache PATH] -- n1 ... nr
    mzr table --depth D --min A --max B [--format json|csv]
    mzr selftest

Exit status: 0 ok, 1 singular input, 2 usage error, 3 regularity violation.
"""
from __future__ import annotations

import argparse
import csv
import itertools
import json
import os
import sys
from typing import Sequence, TextIO

from .errors import RegularityViolation, SingularInput
from .index import classify
from .numerics import CACHE_ENV, EvalConfig, NumericCache, eval_combination
from .reduce import parse_pivot, reduce, reduce_with_trace

EXIT_SINGULAR = 1
EXIT_USAGE = 2
EXIT_VIOLATION = 3


def _pivot(text: str):
    try:
        return parse_pivot(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mzr", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="regular/singular verdict for an integer point")
    p.add_argument("entries", nargs="+", type=int)

    p = sub.add_parser("reduce", help="exact reduction to multiple zeta values")
    p.add_argument("--pivot", type=_pivot, default="rightmost")
    p.add_argument("--format", choices=("json", "latex", "plain"), default="json")
    p.add_argument("--trace", action="store_true")
    p.add_argument("entries", nargs="+", type=int)

    p = sub.add_parser("eval", help="numeric value of the reduced combination")
    p.add_argument("--N", type=int, default=10**6)
    p.add_argument("--cache", default=None, help=f"JSON cache file (default ${CACHE_ENV})")
    p.add_argument("--pivot", type=_pivot, default="rightmost")
    p.add_argument("entries", nargs="+", type=int)

    p = sub.add_parser("table", help="reduce every regular point of a box")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--min", type=int, required=True, dest="lo")
    p.add_argument("--max", type=int, required=True, dest="hi")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--N", type=int, default=10**6)
    p.add_argument("--cache", default=None)

    sub.add_parser("selftest", help="run the built-in invariant suite")
    return parser


def _cache(path: str | None) -> NumericCache | None:
    path = path or os.environ.get(CACHE_ENV)
    return NumericCache(path) if path else None


def _singular(entries, verdict, err: TextIO) -> int:
    print(json.dumps(verdict.to_json(), separators=(",", ":")), file=err)
    return EXIT_SINGULAR


def cmd_classify(args, out: TextIO, err: TextIO) -> int:
    print(json.dumps(classify(args.entries).to_json(), separators=(",", ":")), file=out)
    return 0


def cmd_reduce(args, out: TextIO, err: TextIO) -> int:
    combo, trace = reduce_with_trace(args.entries, args.pivot)
    if args.format == "json":
        obj = combo.to_json_obj()
        if args.trace:
            obj["trace"] = trace.to_json_obj()
        print(json.dumps(obj, separators=(",", ":")), file=out)
    else:
        print(combo.to_latex() if args.format == "latex" else combo.to_plain(), file=out)
        if args.trace:
            print(json.dumps(trace.to_json_obj()), file=out)
    return 0


def cmd_eval(args, out: TextIO, err: TextIO) -> int:
    cfg = EvalConfig(N=args.N)
    cache = _cache(args.cache)
    v = eval_combination(reduce(args.entries, args.pivot), cfg, cache)
    if cache is not None:
        cache.save()
    print(json.dumps(v.to_json_obj(), separators=(",", ":")), file=out)
    return 0


def cmd_table(args, out: TextIO, err: TextIO) -> int:
    if args.depth < 1 or args.lo > args.hi:
        print("table needs depth >= 1 and min <= max", file=err)
        return EXIT_USAGE
    cfg = EvalConfig(N=args.N)
    cache = _cache(args.cache)
    writer = None
    if args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow([f"n{i}" for i in range(1, args.depth + 1)]
                        + ["status", "value", "error_bound", "combination"])
    for p in itertools.product(range(args.lo, args.hi + 1), repeat=args.depth):
        if not classify(p):
            continue
        combo = reduce(p)
        v = eval_combination(combo, cfg, cache)
        if writer is not None:
            writer.writerow(list(p) + ["regular", repr(v.value), repr(v.error_bound), combo.to_json()])
        else:
            record = {"point": list(p), "status": "regular", "value": v.value,
                      "error_bound": v.error_bound, "combination": combo.to_json_obj()}
            print(json.dumps(record, separators=(",", ":")), file=out)
    if cache is not None:
        cache.save()
    return 0


def cmd_selftest(args, out: TextIO, err: TextIO) -> int:
    from .selftest import run_selftest

    return 0 if run_selftest(out) else 1


COMMANDS = {
    "classify": cmd_classify,
    "reduce": cmd_reduce,
    "eval": cmd_eval,
    "table": cmd_table,
    "selftest": cmd_selftest,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else 0
    try:
        return COMMANDS[args.command](args, out, err)
    except SingularInput as e:
        return _singular(e.point, e.verdict, err)
    except RegularityViolation as e:
        print(str(e), file=err)
        print(json.dumps(e.trace.to_json_obj()), file=err)
        return EXIT_VIOLATION
    except ValueError as e:
        print(f"mzr: {e}", file=err)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
