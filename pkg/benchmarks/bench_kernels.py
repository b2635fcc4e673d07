#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Usage:
    python benchmarks/bench_kernels.py [--sites 2097152] [--l-max 100]
                                       [--series-evals 2000] [--repeat 3]

Times the two hot kernels (Gauss-series evaluation and the all-lags spectral
sums) on each available backend, plus an end-to-end correlation-table build,
and prints a small table with speedups.
"""

import argparse
import time

import numpy as np

from chainent.kernels import available_backends


def best_of(repeat, func):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        func()
        times.append(time.perf_counter() - start)
    return min(times)


def bench_series(impl, evals):
    # parameters typical of a strong-coupling sweep (x = z^2 at alpha = 0.99)
    def run():
        for l in range(evals):
            impl.hyp2f1_series(0.5, (l % 100) + 0.5, (l % 100) + 1.0,
                               0.7527254222069316, 1e-14, 10**6)
    return run


def bench_cosine_sums(impl, weights, l_max):
    def run():
        impl.cosine_lag_sums(weights, l_max)
    return run


def bench_table(backend_name, l_max):
    import importlib
    import os

    def run():
        os.environ.pop("CHAINENT_PURE_KERNELS", None)
        if backend_name == "pure":
            os.environ["CHAINENT_PURE_KERNELS"] = "1"
        import chainent.kernels
        importlib.reload(chainent.kernels)
        import chainent.correlations
        importlib.reload(chainent.correlations)
        chainent.correlations.correlation_table(0.99, l_max)
    return run


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sites", type=int, default=2**21,
                        help="chain length for the spectral-sum kernel")
    parser.add_argument("--l-max", type=int, default=100)
    parser.add_argument("--series-evals", type=int, default=2000)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = available_backends()
    print(f"backends: {', '.join(backends)}")
    theta = (2.0 * np.pi / args.sites) * np.arange(args.sites)
    weights = 1.0 / np.sqrt(1.0 - 0.99 * np.cos(theta))

    rows = []
    for name, impl in backends.items():
        t_series = best_of(args.repeat, bench_series(impl, args.series_evals))
        t_sums = best_of(args.repeat,
                         bench_cosine_sums(impl, weights, args.l_max))
        t_table = best_of(args.repeat, bench_table(name, args.l_max))
        rows.append((name, t_series, t_sums, t_table))

    header = (f"{'backend':<8} {'2F1 series':>12} {'cosine sums':>12} "
              f"{'corr table':>12}")
    print(header)
    print("-" * len(header))
    for name, t_series, t_sums, t_table in rows:
        print(f"{name:<8} {t_series * 1e3:>10.1f}ms {t_sums * 1e3:>10.1f}ms "
              f"{t_table * 1e3:>10.1f}ms")
    if len(rows) == 2:
        base = {name: (a, b, c) for name, a, b, c in rows}
        if "pure" in base and "cython" in base:
            speedups = [p / c for p, c in zip(base["pure"], base["cython"])]
            print(f"speedup  {speedups[0]:>11.1f}x {speedups[1]:>11.1f}x "
                  f"{speedups[2]:>11.1f}x")

    # both backends must agree before any timing claim means anything
    if len(backends) == 2:
        pure, fast = backends["pure"], backends["cython"]
        v1, _ = pure.hyp2f1_series(0.5, 1.5, 2.0, 0.75, 1e-14, 10**6)
        v2, _ = fast.hyp2f1_series(0.5, 1.5, 2.0, 0.75, 1e-14, 10**6)
        assert v1 == v2
        s1 = pure.cosine_lag_sums(weights[:65536], 32)
        s2 = fast.cosine_lag_sums(weights[:65536], 32)
        assert np.allclose(s1, s2, atol=1e-9)
        print("cross-check: backends agree")


if __name__ == "__main__":
    main()
