"""Times the JIT kernels against the pure-numpy fallback.

Usage: python3 benchmarks/bench_kernels.py

Prints per-kernel best-of-5 timings over a range of matrix shapes plus an
end-to-end comparison of both ranking pipelines. JIT compilation happens
during warmup and is not counted.
"""
import timeit

import numpy as np

from fuzzyrank import kernels
from fuzzyrank.topsis import rank_topsis
from fuzzyrank.wp import rank_wp

SHAPES = [(50, 5), (500, 10), (5000, 20), (20000, 40)]


def best_seconds(func, *args, repeat=5, number=20):
    timer = timeit.Timer(lambda: func(*args))
    return min(timer.repeat(repeat=repeat, number=number)) / number


def kernel_rows(rng):
    rows = []
    for m, n in SHAPES:
        x = kernels.as_kernel_matrix(rng.uniform(0.1, 50.0, size=(m, n)))
        ideal_pos = np.ascontiguousarray(x.max(axis=0))
        ideal_neg = np.ascontiguousarray(x.min(axis=0))
        log_x = kernels.as_kernel_matrix(np.log(x))
        w = np.ascontiguousarray(rng.uniform(-0.5, 0.5, size=n))
        cases = [
            ("norm_columns", (x,)),
            ("separations", (x, ideal_pos, ideal_neg)),
            ("wp_exp_scores", (log_x, w)),
        ]
        for name, args in cases:
            jit_func = getattr(kernels.jit_backend, name)
            np_func = getattr(kernels.numpy_backend, name)
            jit_func(*args)  # trigger compilation outside the timed region
            t_np = best_seconds(np_func, *args)
            t_jit = best_seconds(jit_func, *args)
            rows.append((f"{m}x{n}", name, t_np, t_jit))
    return rows


def pipeline_rows(rng):
    rows = []
    for m, n in SHAPES:
        x = rng.uniform(0.1, 50.0, size=(m, n))
        weights = rng.uniform(0.2, 1.0, size=n).tolist()
        orients = ["benefit" if k else "cost" for k in rng.integers(0, 2, size=n)]
        for name, func in (("rank_topsis", rank_topsis), ("rank_wp", rank_wp)):
            func(x, weights, orients)
            rows.append((f"{m}x{n}", name, best_seconds(func, x, weights, orients)))
    return rows


def main():
    if kernels.jit_backend is None:
        print("JIT backend unavailable (numba missing or disabled); nothing to compare.")
        return
    rng = np.random.default_rng(7)

    print(f"{'shape':>9}  {'kernel':<14} {'numpy':>10} {'jit':>10} {'speedup':>8}")
    for shape, name, t_np, t_jit in kernel_rows(rng):
        print(
            f"{shape:>9}  {name:<14} {t_np * 1e6:>8.1f}us {t_jit * 1e6:>8.1f}us "
            f"{t_np / t_jit:>7.2f}x"
        )

    print()
    print(f"active backend: {kernels.BACKEND}")
    print(f"{'shape':>9}  {'pipeline':<14} {'time':>10}")
    for shape, name, t in pipeline_rows(rng):
        print(f"{shape:>9}  {name:<14} {t * 1e6:>8.1f}us")


if __name__ == "__main__":
    main()
