"""Hot numerical loops with a JIT path and a pure-numpy fallback.

The JIT path compiles the kernels with numba. Set FUZZYRANK_DISABLE_JIT=1
to force the numpy path; it is also selected automatically when numba is
not importable. Both paths compute identical values (same order of
floating-point operations is not guaranteed, agreement is to ~1e-12).

`benchmarks/bench_kernels.py` times the two paths side by side.
"""
from __future__ import annotations

import os
from types import SimpleNamespace

import numpy as np


def _norm_columns_np(x):
    """Divide each column by its Euclidean norm; zero columns map to zeros."""
    norms = np.sqrt((x * x).sum(axis=0))
    safe = np.where(norms == 0.0, 1.0, norms)
    return x / safe


def _separations_np(y, ideal_pos, ideal_neg):
    """Euclidean distances of every row from the two ideal points."""
    d_pos = np.sqrt(((ideal_pos - y) ** 2).sum(axis=1))
    d_neg = np.sqrt(((y - ideal_neg) ** 2).sum(axis=1))
    return d_pos, d_neg


def _wp_exp_scores_np(log_x, signed_weights):
    """exp of the weighted row sums of an elementwise-log matrix."""
    return np.exp(log_x @ signed_weights)


def _build_jit():
    from numba import njit

    @njit(cache=True)
    def norm_columns(x):
        m, n = x.shape
        # row-major passes: the input is C-contiguous
        acc = np.zeros(n, dtype=np.float64)
        for i in range(m):
            for j in range(n):
                acc[j] += x[i, j] * x[i, j]
        norms = np.empty(n, dtype=np.float64)
        for j in range(n):
            norm = np.sqrt(acc[j])
            norms[j] = norm if norm != 0.0 else 1.0
        out = np.empty((m, n), dtype=np.float64)
        for i in range(m):
            for j in range(n):
                out[i, j] = x[i, j] / norms[j]
        return out

    @njit(cache=True)
    def separations(y, ideal_pos, ideal_neg):
        m, n = y.shape
        d_pos = np.empty(m, dtype=np.float64)
        d_neg = np.empty(m, dtype=np.float64)
        for i in range(m):
            acc_p = 0.0
            acc_n = 0.0
            for j in range(n):
                dp = ideal_pos[j] - y[i, j]
                dn = y[i, j] - ideal_neg[j]
                acc_p += dp * dp
                acc_n += dn * dn
            d_pos[i] = np.sqrt(acc_p)
            d_neg[i] = np.sqrt(acc_n)
        return d_pos, d_neg

    @njit(cache=True)
    def wp_exp_scores(log_x, signed_weights):
        m, n = log_x.shape
        out = np.empty(m, dtype=np.float64)
        for i in range(m):
            acc = 0.0
            for j in range(n):
                acc += log_x[i, j] * signed_weights[j]
            out[i] = np.exp(acc)
        return out

    return SimpleNamespace(
        norm_columns=norm_columns,
        separations=separations,
        wp_exp_scores=wp_exp_scores,
    )


numpy_backend = SimpleNamespace(
    norm_columns=_norm_columns_np,
    separations=_separations_np,
    wp_exp_scores=_wp_exp_scores_np,
)

jit_backend = None
if os.environ.get("FUZZYRANK_DISABLE_JIT", "") != "1":
    try:
        jit_backend = _build_jit()
    except ImportError:
        jit_backend = None

_active = jit_backend if jit_backend is not None else numpy_backend

BACKEND = "numba" if jit_backend is not None else "numpy"

norm_columns = _active.norm_columns
separations = _active.separations
wp_exp_scores = _active.wp_exp_scores


def as_kernel_matrix(values) -> np.ndarray:
    """C-contiguous float64 copy, the layout the kernels are compiled for."""
    return np.ascontiguousarray(values, dtype=np.float64)
