"""Distance-to-ideal ranking pipeline.

Steps: vector-normalize the crisp matrix column by column, weigh the
normalized values, locate the positive and negative ideal points per the
criterion orientations, measure each row's Euclidean separation from both
ideals, and score closeness V = D-/(D- + D+). Higher V is better.

Weights are applied as given (unnormalized defuzzified values); ranks are
recomputed from full-precision values with ties broken by ascending id.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DomainError
from .model import ORIENTATIONS, CrispMatrix, rank_descending


class DimensionMismatch(DomainError):
    """Input shapes do not agree."""


class DegenerateAlternativeWarning(UserWarning):
    """D+ = D- = 0 for some row; its closeness is reported as 0.5."""


@dataclass(frozen=True)
class TopsisTrace:
    """Every intermediate quantity of one ranking run."""

    alternatives: tuple[str, ...]
    normalized: np.ndarray
    weighted: np.ndarray
    ideal_pos: np.ndarray
    ideal_neg: np.ndarray
    dist_pos: np.ndarray
    dist_neg: np.ndarray
    closeness: np.ndarray
    ranks: np.ndarray


def _as_matrix(matrix) -> tuple[tuple[str, ...] | None, np.ndarray]:
    if isinstance(matrix, CrispMatrix):
        return matrix.alternatives, kernels.as_kernel_matrix(matrix.values)
    grid = kernels.as_kernel_matrix(np.asarray(matrix, dtype=np.float64))
    if grid.ndim != 2:
        raise DimensionMismatch("decision matrix must be two-dimensional")
    return None, grid


def normalize(matrix) -> np.ndarray:
    """r_ij = x_ij / sqrt(sum_i x_ij^2); an all-zero column maps to zeros."""
    _, grid = _as_matrix(matrix)
    if grid.size == 0:
        raise DimensionMismatch("decision matrix must be non-empty")
    return kernels.norm_columns(grid)


def weigh(normalized, weights) -> np.ndarray:
    """y_ij = w_j * r_ij with one weight per column."""
    r = np.asarray(normalized, dtype=np.float64)
    w = np.asarray(weights, dtype=np.float64)
    if r.ndim != 2 or w.ndim != 1 or w.shape[0] != r.shape[1]:
        raise DimensionMismatch(
            f"need one weight per column, got weights {w.shape} for matrix {r.shape}"
        )
    return r * w


def ideal_solutions(weighted, orientations) -> tuple[np.ndarray, np.ndarray]:
    """Per-column best and worst: max/min for benefit, swapped for cost."""
    y = np.asarray(weighted, dtype=np.float64)
    orients = list(orientations)
    if y.ndim != 2 or len(orients) != y.shape[1]:
        raise DimensionMismatch("need one orientation per column")
    bad = [o for o in orients if o not in ORIENTATIONS]
    if bad:
        raise DomainError(f"unknown orientation {bad[0]!r}")
    col_max = y.max(axis=0)
    col_min = y.min(axis=0)
    benefit = np.array([o == "benefit" for o in orients])
    ideal_pos = np.where(benefit, col_max, col_min)
    ideal_neg = np.where(benefit, col_min, col_max)
    return ideal_pos, ideal_neg


def separations(weighted, ideal_pos, ideal_neg) -> tuple[np.ndarray, np.ndarray]:
    """Euclidean distance of each row from the two ideal points."""
    y = kernels.as_kernel_matrix(np.asarray(weighted, dtype=np.float64))
    a_pos = np.ascontiguousarray(ideal_pos, dtype=np.float64)
    a_neg = np.ascontiguousarray(ideal_neg, dtype=np.float64)
    if y.ndim != 2 or a_pos.shape != (y.shape[1],) or a_neg.shape != (y.shape[1],):
        raise DimensionMismatch("ideal vectors must have one entry per column")
    return kernels.separations(y, a_pos, a_neg)


def closeness(dist_pos, dist_neg) -> np.ndarray:
    """V_i = D_i- / (D_i- + D_i+), in [0, 1].

    A row with D+ = D- = 0 has no preference information; it is reported
    via DegenerateAlternativeWarning and scored 0.5 by convention.
    """
    d_pos = np.asarray(dist_pos, dtype=np.float64)
    d_neg = np.asarray(dist_neg, dtype=np.float64)
    if d_pos.shape != d_neg.shape:
        raise DimensionMismatch("distance vectors must have equal length")
    total = d_pos + d_neg
    degenerate = total == 0.0
    if np.any(degenerate):
        rows = np.nonzero(degenerate)[0].tolist()
        warnings.warn(
            f"rows {rows} are equidistant from both ideals (D+ = D- = 0); "
            "scoring them 0.5",
            DegenerateAlternativeWarning,
            stacklevel=2,
        )
    safe = np.where(degenerate, 1.0, total)
    return np.where(degenerate, 0.5, d_neg / safe)


def rank_topsis(matrix, weights, orientations, ids=None) -> TopsisTrace:
    """Run the full pipeline and return every intermediate quantity.

    `ids` names the rows of a plain array input (a CrispMatrix carries its
    own); names matter because rank ties break by ascending id.
    """
    mat_ids, grid = _as_matrix(matrix)
    if ids is not None:
        ids = tuple(str(i) for i in ids)
        if len(ids) != grid.shape[0]:
            raise DimensionMismatch("need one id per row")
        mat_ids = ids
    ids = mat_ids
    r = normalize(grid)
    y = weigh(r, weights)
    a_pos, a_neg = ideal_solutions(y, orientations)
    d_pos, d_neg = separations(y, a_pos, a_neg)
    v = closeness(d_pos, d_neg)
    ranks = rank_descending(v, ids)
    if ids is None:
        ids = tuple(str(i) for i in range(grid.shape[0]))
    return TopsisTrace(
        alternatives=tuple(ids),
        normalized=r,
        weighted=y,
        ideal_pos=a_pos,
        ideal_neg=a_neg,
        dist_pos=d_pos,
        dist_neg=d_neg,
        closeness=v,
        ranks=ranks,
    )
