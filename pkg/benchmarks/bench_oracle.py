#!/usr/bin/env python3
"""Time the brute-force classification kernels against each other.

The numba @njit kernel and the pure-numpy batched fallback compute the
same (peaklessness, end level, height) table over all 3^n sequences; this
script reports the best-of-k wall time for each backend and the speedup.

    python benchmarks/bench_oracle.py -n 12,14 --repeat 3
"""
import argparse
import time

import numpy as np

from peakless import oracle


def best_time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "-n",
        "--lengths",
        default="10,12,14",
        help="comma-separated sequence lengths (default %(default)s)",
    )
    parser.add_argument(
        "--repeat", type=int, default=3, help="runs per measurement (default 3)"
    )
    args = parser.parse_args()
    lengths = [int(part) for part in args.lengths.split(",") if part]

    if oracle.HAVE_NUMBA:
        oracle._classify_njit(4)  # compile outside the timed region
    else:
        print("numba not installed; only the numpy fallback will run")

    header = f"{'n':>4} {'sequences':>12} {'numpy (s)':>10} {'numba (s)':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for n in lengths:
        t_numpy = best_time(lambda: oracle._classify_numpy(n), args.repeat)
        if oracle.HAVE_NUMBA:
            t_numba = best_time(lambda: oracle._classify_njit(n), args.repeat)
            assert np.array_equal(oracle._classify_numpy(n), oracle._classify_njit(n))
            print(
                f"{n:>4} {3**n:>12} {t_numpy:>10.3f} {t_numba:>10.3f} "
                f"{t_numpy / t_numba:>7.1f}x"
            )
        else:
            print(f"{n:>4} {3**n:>12} {t_numpy:>10.3f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
