"""Command-line interface: build | verify | bench | gen.

Exit codes: 0 success, 1 verification failure, 2 usage or IO errors.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import resource
import statistics
import sys
import time

import numpy as np

from . import (
    BACKENDS,
    TRACKER_KINDS,
    InduceOptions,
    build_sa_and_lcp,
    build_suffix_array,
    kasai_lcp,
    phi_lcp,
    verify,
)
from . import arrayio, generators, reference

CSV_HEADER = ["input", "size", "algorithm", "tracker", "seconds",
              "peak_bytes", "verified"]

BENCH_ALGOS = ("induce", "kasai", "phi", "naive")


def _read_input(path: str) -> bytes:
    with open(path, "rb") as fh:
        return fh.read()


def _peak_bytes() -> int:
    # ru_maxrss is kilobytes on Linux
    return resource.getrusage(resource.RUSAGE_SELF).ru_maxrss * 1024


def cmd_build(args) -> int:
    try:
        data = _read_input(args.input)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    opts = InduceOptions(tracker_kind=args.rmq)
    if args.lcp:
        sa, lcp = build_sa_and_lcp(data, opts, backend=args.backend)
    else:
        sa = build_suffix_array(data, backend=args.backend)
        lcp = None
    sa_path = args.sa or args.input + ".sa"
    try:
        arrayio.write_array(sa_path, sa, args.format)
        if args.lcp:
            arrayio.write_array(args.lcp, lcp, args.format)
    except arrayio.WidthError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def cmd_verify(args) -> int:
    try:
        data = _read_input(args.input)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    opts = InduceOptions(tracker_kind=args.rmq)
    sa, lcp = build_sa_and_lcp(data, opts, backend=args.backend)
    report = verify(data, list(sa), list(lcp))
    if not report.ok:
        index, kind = report.first_violation
        print(f"FAIL: {kind} at rank {index}", file=sys.stderr)
        return 1
    cross = kasai_lcp(data, sa, backend=args.backend)
    if len(lcp) and not np.array_equal(np.asarray(lcp), np.asarray(cross)):
        print("FAIL: induced LCP disagrees with rank-array LCP",
              file=sys.stderr)
        return 1
    digest = hashlib.sha256()
    digest.update(np.asarray(sa, np.int64).tobytes())
    digest.update(np.asarray(lcp, np.int64).tobytes())
    print(f"ok {args.input} n={len(data)} digest={digest.hexdigest()[:16]}")
    return 0


def _time_runs(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return statistics.median(times)


def _bench_one(name: str, data: bytes, algos, args, records: list) -> None:
    opts = InduceOptions(tracker_kind=args.rmq)
    size = len(data)

    def record(algorithm, seconds, verified):
        records.append({
            "input": name, "size": size, "algorithm": algorithm,
            "tracker": args.rmq,
            "seconds": "" if seconds is None else f"{seconds:.6f}",
            "peak_bytes": _peak_bytes(), "verified": verified,
        })

    def check(sa, lcp):
        if not args.verify:
            return ""
        report = reference.verify(data, list(sa), list(lcp))
        return "ok" if report.ok else report.first_violation[1]

    sa = build_suffix_array(data, backend=args.backend)
    sa_seconds = _time_runs(
        lambda: build_suffix_array(data, backend=args.backend), args.repeat)
    # certifying the bare SA still needs LCP values; derive them
    record("sa", sa_seconds,
           check(sa, kasai_lcp(data, sa, backend=args.backend))
           if args.verify else "")

    marginal = None
    for algo in algos:
        try:
            if algo == "induce":
                _, lcp = build_sa_and_lcp(data, opts, backend=args.backend)
                seconds = _time_runs(
                    lambda: build_sa_and_lcp(data, opts,
                                             backend=args.backend),
                    args.repeat)
                marginal = max(seconds - sa_seconds, 0.0)
                record("induce", seconds, check(sa, lcp))
                record("induce-marginal", marginal, "")
            elif algo in ("kasai", "phi"):
                fn = kasai_lcp if algo == "kasai" else phi_lcp
                lcp = fn(data, sa, backend=args.backend)
                seconds = _time_runs(
                    lambda: fn(data, sa, backend=args.backend), args.repeat)
                record(algo, seconds, check(sa, lcp))
            elif algo == "naive":
                sa_list = list(sa)
                lcp = reference.naive_lcp(data, sa_list)
                seconds = _time_runs(
                    lambda: reference.naive_lcp(data, sa_list), args.repeat)
                record("naive", seconds, check(sa, lcp))
        except Exception as exc:  # keep benchmarking the rest
            print(f"error: {name}/{algo}: {exc}", file=sys.stderr)
            record(algo, None, "error")

    kasai_rows = [r for r in records
                  if r["input"] == name and r["algorithm"] == "kasai"
                  and r["seconds"]]
    if marginal is not None and kasai_rows and size >= 20 * 1024 * 1024:
        kasai_seconds = float(kasai_rows[-1]["seconds"])
        trend = "below" if marginal < kasai_seconds else "NOT below"
        print(f"info: {name}: marginal induced-LCP cost {marginal:.3f}s is "
              f"{trend} standalone rank-array cost {kasai_seconds:.3f}s")


def cmd_bench(args) -> int:
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    for a in algos:
        if a not in BENCH_ALGOS:
            print(f"error: unknown algorithm {a!r}", file=sys.stderr)
            return 2
    records: list[dict] = []
    for path in args.inputs:
        try:
            data = _read_input(path)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        _bench_one(path, data, algos, args, records)

    widths = {h: max(len(h), *(len(str(r[h])) for r in records), 1)
              for h in CSV_HEADER} if records else {h: len(h)
                                                    for h in CSV_HEADER}
    print("  ".join(h.ljust(widths[h]) for h in CSV_HEADER))
    for r in records:
        print("  ".join(str(r[h]).ljust(widths[h]) for h in CSV_HEADER))

    if args.csv:
        try:
            with open(args.csv, "w", newline="") as fh:
                writer = csv.DictWriter(fh, fieldnames=CSV_HEADER)
                writer.writeheader()
                writer.writerows(records)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    return 0


def cmd_gen(args) -> int:
    try:
        data = generators.generate(args.kind, args.length, args.sigma,
                                   args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        with open(args.out, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sailcp",
        description="Suffix array and LCP array construction by "
                    "induced sorting.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--rmq", choices=TRACKER_KINDS, default="marray",
                       help="per-bucket minimum tracker")
        p.add_argument("--backend", choices=BACKENDS, default="auto")

    p = sub.add_parser("build", help="build SA (and optionally LCP) files")
    p.add_argument("input")
    p.add_argument("--sa", help="suffix array output (default INPUT.sa)")
    p.add_argument("--lcp", help="also build the LCP array into this file")
    p.add_argument("--format", choices=arrayio.FORMATS, default="bin32")
    common(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="build and certify SA+LCP")
    p.add_argument("input")
    p.add_argument("--algo", choices=("induce",), default="induce")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time SA/LCP construction algorithms")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--algos", default="induce,kasai,phi",
                   help="comma-separated subset of induce,kasai,phi,naive")
    p.add_argument("--repeat", type=int, default=1,
                   help="runs per timing; wall time is the median")
    p.add_argument("--csv", help="also write records to this CSV file")
    p.add_argument("--verify", action="store_true",
                   help="certify every built array")
    common(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("gen", help="generate deterministic test inputs")
    p.add_argument("--kind", choices=generators.KINDS, required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--sigma", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
