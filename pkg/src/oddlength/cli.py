"""
Command line interface.

    oddlength dist --family A --rank 11 --k 2 --h 1 --out a11.csv
    oddlength verify --suite figure1 --max-order 3700000
    oddlength info --family E --rank 7
"""

from __future__ import annotations

import argparse
import sys
import time

from ._pool import THREADS_ENV, default_threads
from .distribution import is_unimodal, to_csv
from .engine import compute_distribution
from .root_system import FAMILIES, GroupSpec, build_root_system, height_class_count
from .stats import StatSpec
from .verify import DEFAULT_MAX_ORDER, SUITES, verify_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _group(args) -> GroupSpec:
    try:
        return GroupSpec(args.family, args.rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _stat(args) -> StatSpec:
    try:
        return StatSpec(args.k, args.h)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_dist(args) -> int:
    group, stat = _group(args), _stat(args)
    order = build_root_system(group).order
    if order > args.max_order:
        print(f"error: |W({group})| = {order} exceeds --max-order {args.max_order}; "
              f"raise it explicitly to run", file=sys.stderr)
        return EXIT_RESOURCE
    t0 = time.perf_counter()
    dist = compute_distribution(group, stat, args.threads)
    elapsed = time.perf_counter() - t0
    text = to_csv(dist)
    if args.out:
        with open(args.out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    ok, dip = is_unimodal(dist)
    verdict = "unimodal" if ok else f"NOT unimodal (dip at {dip})"
    print(f"W({group}) k={stat.k} h={stat.h}: order {dist.total}, degree {dist.degree}, "
          f"{verdict}, {elapsed:.2f}s", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify_suite(args.suite, args.max_order, args.threads)
    sys.stdout.write(report.lines() if args.machine else report.render())
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_info(args) -> int:
    group = _group(args)
    rs = build_root_system(group)
    print(f"type        {group}")
    print(f"|Phi+|      {rs.num_positive}")
    print(f"|W|         {rs.order}")
    hist = rs.height_histogram()
    print("heights     " + " ".join(f"{ht}:{c}" for ht, c in hist.items()))
    if args.k is not None:
        stat = _stat(argparse.Namespace(k=args.k, h=1 if args.h is None else args.h))
        print(f"L_{{{stat.k},{stat.h}}}(w0)  {height_class_count(rs, stat.k, stat.h)}")
    return EXIT_OK


def _positive_int(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="oddlength", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def group_args(p):
        p.add_argument("--family", required=True, type=str.upper, choices=list(FAMILIES))
        p.add_argument("--rank", required=True, type=int)

    def run_args(p):
        p.add_argument("--threads", type=_positive_int, default=None,
                       help=f"worker threads (default: ${THREADS_ENV} or {default_threads()})")
        p.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER,
                       help=f"largest group order to enumerate (default {DEFAULT_MAX_ORDER})")

    p = sub.add_parser("dist", help="distribution of L_{k,h} as CSV")
    group_args(p)
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--h", required=True, type=int)
    p.add_argument("--out", help="write CSV here instead of stdout")
    run_args(p)
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("verify", help="recompute published tables")
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--machine", action="store_true", help="print 'TABLE CELL STATUS' lines")
    run_args(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("info", help="root system summary")
    group_args(p)
    p.add_argument("--k", type=int)
    p.add_argument("--h", type=int)
    p.set_defaults(func=cmd_info)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OverflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
