"""Weighted-product ranking pipeline.

Raw weights are normalized to magnitudes summing to 1 and signed by
orientation: positive exponents for benefit criteria, negative for cost.
Each row's score is S_i = prod_j x_ij^w_j, evaluated in log space so that
many small factors do not underflow, and preferences are V_i = S_i / sum S.
Higher V is better. Ranks use full precision, ties broken by ascending id.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DomainError
from .model import ORIENTATIONS, CrispMatrix, rank_descending
from .topsis import DimensionMismatch

# floor for zero cells on non-negative exponents; 0^positive would
# annihilate a row irreversibly, 0^negative is undefined
EPSILON = 1e-9


class NonPositiveWeight(DomainError):
    """Raw weights must all be strictly positive."""


class ZeroOnCostCriterion(DomainError):
    """A zero cell under a negative exponent has no defined score."""

    def __init__(self, row: int, column: int):
        super().__init__(
            f"cell [{row}, {column}] is 0 on a cost criterion; "
            "0 to a negative power is undefined"
        )
        self.row = row
        self.column = column


class NonFiniteScore(DomainError):
    """A product score evaluated to NaN or infinity."""


class ZeroClampWarning(UserWarning):
    """Zero cells on benefit criteria were raised to the EPSILON floor."""


@dataclass(frozen=True)
class WpTrace:
    """Signed weights, scores, preferences, and ranks of one run."""

    alternatives: tuple[str, ...]
    norm_weights: np.ndarray
    scores: np.ndarray
    preferences: np.ndarray
    ranks: np.ndarray


def normalize_weights(raw, orientations) -> np.ndarray:
    """Scale magnitudes to sum 1, then sign by orientation."""
    w = np.asarray(raw, dtype=np.float64)
    orients = list(orientations)
    if w.ndim != 1 or len(orients) != w.shape[0]:
        raise DimensionMismatch("need one orientation per weight")
    bad = [o for o in orients if o not in ORIENTATIONS]
    if bad:
        raise DomainError(f"unknown orientation {bad[0]!r}")
    if np.any(w <= 0.0) or not np.all(np.isfinite(w)):
        raise NonPositiveWeight(f"raw weights must be > 0, got {w.tolist()}")
    sign = np.array([1.0 if o == "benefit" else -1.0 for o in orients])
    return sign * w / w.sum()


def wp_scores(matrix, signed_weights) -> np.ndarray:
    """S_i = prod_j x_ij^w_j, computed as exp(sum w_j log x_ij)."""
    if isinstance(matrix, CrispMatrix):
        grid = kernels.as_kernel_matrix(matrix.values)
    else:
        grid = kernels.as_kernel_matrix(np.asarray(matrix, dtype=np.float64))
    sw = np.ascontiguousarray(signed_weights, dtype=np.float64)
    if grid.ndim != 2 or sw.shape != (grid.shape[1],):
        raise DimensionMismatch("need one signed weight per column")

    zero = grid == 0.0
    neg_exp = sw < 0.0
    bad = zero & neg_exp
    if np.any(bad):
        i, j = np.argwhere(bad)[0]
        raise ZeroOnCostCriterion(int(i), int(j))
    clamp = zero & ~neg_exp
    if np.any(clamp):
        rows = sorted(set(np.argwhere(clamp)[:, 0].tolist()))
        warnings.warn(
            f"zero cells in rows {rows} raised to {EPSILON} before scoring",
            ZeroClampWarning,
            stacklevel=2,
        )
        grid = np.where(clamp, EPSILON, grid)

    with np.errstate(invalid="ignore", divide="ignore"):
        log_x = np.log(grid)
    scores = kernels.wp_exp_scores(kernels.as_kernel_matrix(log_x), sw)
    if not np.all(np.isfinite(scores)):
        i = int(np.nonzero(~np.isfinite(scores))[0][0])
        raise NonFiniteScore(f"score for row {i} is not finite")
    return scores


def wp_preferences(scores) -> np.ndarray:
    """V_i = S_i / sum_k S_k; positive scores give V in (0, 1) summing to 1."""
    s = np.asarray(scores, dtype=np.float64)
    return s / s.sum()


def rank_wp(matrix, weights, orientations, ids=None) -> WpTrace:
    """Run the full pipeline and return the trace.

    `ids` names the rows of a plain array input (a CrispMatrix carries its
    own); names matter because rank ties break by ascending id.
    """
    if ids is None:
        ids = matrix.alternatives if isinstance(matrix, CrispMatrix) else None
    else:
        ids = tuple(str(i) for i in ids)
    sw = normalize_weights(weights, orientations)
    scores = wp_scores(matrix, sw)
    prefs = wp_preferences(scores)
    if ids is not None and len(ids) != len(prefs):
        raise DimensionMismatch("need one id per row")
    ranks = rank_descending(prefs, ids)
    if ids is None:
        ids = tuple(str(i) for i in range(len(prefs)))
    return WpTrace(
        alternatives=tuple(ids),
        norm_weights=sw,
        scores=scores,
        preferences=prefs,
        ranks=ranks,
    )
