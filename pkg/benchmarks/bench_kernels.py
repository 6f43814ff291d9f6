#!/usr/bin/env python3
"""Benchmark the compiled kernels against their numpy fallbacks.

Runs each hot kernel on a large prime with both backends and prints a
timing table.  The same comparison can be forced package-wide by setting
JACOBI49_PURE_NUMPY=1.

Usage: python benchmarks/bench_kernels.py [--prime P] [--repeat N]
"""

import argparse
import time

from jacobi49 import _kernels
from jacobi49.prime_field import find_generator, is_prime


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--prime", type=int, default=999983)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    p = args.prime
    if not is_prime(p):
        raise SystemExit(f"{p} is not prime")
    gamma = find_generator(p)
    print(f"p = {p}, gamma = {gamma}, numba active: {_kernels.USING_NUMBA}")
    if not _kernels.USING_NUMBA:
        print("numba unavailable or disabled; benchmarking the fallbacks only")

    _kernels.warmup()
    ind = _kernels.index_table(p, gamma)

    cases = [
        ("index_table", lambda: _kernels.index_table(p, gamma),
         lambda: _kernels._index_table_np(p, gamma)),
        ("pair_counts(e=49)", lambda: _kernels.pair_counts(ind, 49),
         lambda: _kernels._pair_counts_np(ind, 49)),
        ("power_pair_hist(e=49)", lambda: _kernels.power_pair_hist(ind, 49, 1, 5),
         lambda: _kernels._power_pair_hist_np(ind, 49, 1, 5)),
        ("power_pair_hist_variant", lambda: _kernels.power_pair_hist_variant(ind, 49, 1, 5),
         lambda: _kernels._power_pair_hist_variant_np(ind, 49, 1, 5)),
        ("cubic_roots", lambda: _kernels.cubic_roots(p),
         lambda: _kernels._cubic_roots_np(p)),
    ]
    print(f"{'kernel':28s} {'active':>10s} {'numpy':>10s} {'speedup':>8s}")
    for name, active, fallback in cases:
        t_active, out_a = best_of(active, args.repeat)
        t_np, out_b = best_of(fallback, args.repeat)
        import numpy as np
        assert np.array_equal(np.asarray(out_a), np.asarray(out_b)), name
        ratio = t_np / t_active if t_active > 0 else float("inf")
        print(f"{name:28s} {t_active * 1e3:9.2f}ms {t_np * 1e3:9.2f}ms {ratio:7.1f}x")


if __name__ == "__main__":
    main()
