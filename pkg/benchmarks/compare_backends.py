"""Compare the pure-Python and compiled backends on generated inputs.

Usage: python benchmarks/compare_backends.py [--size BYTES] [--repeat K]

Times SA-only and combined SA+LCP construction for both backends on
each generator kind and prints a small table plus the speedup factor.
"""

import argparse
import statistics
import time

import sailcp
from sailcp.generators import KINDS, generate


def timed(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--size", type=int, default=2 * 10 ** 6)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--sigma", type=int, default=16)
    args = parser.parse_args()

    backends = ["python"]
    if sailcp.HAVE_COMPILED:
        backends.append("compiled")
    else:
        print("note: compiled backend unavailable, timing pure Python only")

    header = f"{'input':<10} {'task':<8}" + "".join(
        f" {b:>10}" for b in backends) + f" {'speedup':>8}"
    print(header)
    for kind in KINDS:
        data = generate(kind, args.size, sigma=args.sigma, seed=1)
        for task, make in (
                ("sa", lambda b: sailcp.build_suffix_array(data, backend=b)),
                ("sa+lcp", lambda b: sailcp.build_sa_and_lcp(data,
                                                             backend=b))):
            row = {}
            for backend in backends:
                row[backend] = timed(lambda: make(backend), args.repeat)
            speedup = (row["python"] / row["compiled"]
                       if "compiled" in row else float("nan"))
            print(f"{kind:<10} {task:<8}" + "".join(
                f" {row[b]:>9.3f}s" for b in backends) + f" {speedup:>7.1f}x")


if __name__ == "__main__":
    main()
