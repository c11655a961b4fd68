#!/usr/bin/env python3
"""Time the numba kernels against the pure-numpy fallbacks.

Runs the two hot kernels (window pattern coding, pairwise dominance scan)
on a grid of sizes under both backends and prints a comparison table.
Results are asserted equal before timing.

    python benchmarks/benchmark_backends.py [--repeats 5]
"""

import argparse
import time

import numpy as np

from ordpat._backend import load_kernels
from ordpat.patterns import series_windows


def best_of(repeats, fn, *args):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    try:
        nb = load_kernels("numba")
    except ImportError:
        print("numba not installed; nothing to compare")
        return 1
    np_mod = load_kernels("numpy")

    rng = np.random.default_rng(20260811)
    print(f"{'kernel':<18} {'size':<16} {'numba ms':>10} {'numpy ms':>10} {'speedup':>8}")
    for n, h in ((10_000, 2), (100_000, 3), (1_000_000, 3)):
        wins = series_windows(rng.standard_normal(n), h)
        assert np.array_equal(nb.codes_for_windows(wins), np_mod.codes_for_windows(wins))
        t_nb = best_of(args.repeats, nb.codes_for_windows, wins)
        t_np = best_of(args.repeats, np_mod.codes_for_windows, wins)
        print(
            f"{'pattern coding':<18} {f'n={n} h={h}':<16} {t_nb * 1e3:>10.2f} "
            f"{t_np * 1e3:>10.2f} {t_np / t_nb:>8.1f}x"
        )
    for m, h in ((500, 1), (1_500, 2), (3_000, 2)):
        xw = series_windows(rng.standard_normal(m + h), h)
        yw = series_windows(rng.standard_normal(m + h), h)
        assert np.array_equal(nb.dominance_scan(xw, yw), np_mod.dominance_scan(xw, yw))
        t_nb = best_of(args.repeats, nb.dominance_scan, xw, yw)
        t_np = best_of(args.repeats, np_mod.dominance_scan, xw, yw)
        print(
            f"{'dominance scan':<18} {f'm={m} h={h}':<16} {t_nb * 1e3:>10.2f} "
            f"{t_np * 1e3:>10.2f} {t_np / t_nb:>8.1f}x"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
