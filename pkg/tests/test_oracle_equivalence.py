"""Cross-checks the vectorized engines against naive reference loops.

The reference implementations in oracles.py use plain Python loops and
no shared code with the package, so agreement here guards against
vectorization mistakes in either method.
"""

import numpy as np
import pytest

from fuzzyrank.topsis import rank_topsis
from fuzzyrank.wp import rank_wp

from oracles import topsis_reference, wp_reference

CASES = 100
ROWS = 5
COLS = 4


def _random_problem(seed):
    rng = np.random.default_rng(seed)
    matrix = rng.uniform(0.1, 50.0, size=(ROWS, COLS))
    weights = rng.uniform(0.1, 2.0, size=COLS)
    orientations = [
        "benefit" if flip else "cost" for flip in rng.integers(0, 2, size=COLS)
    ]
    return matrix, weights, orientations


@pytest.mark.parametrize("seed", range(CASES))
def test_topsis_matches_reference(seed):
    matrix, weights, orientations = _random_problem(seed)
    trace = rank_topsis(matrix, weights, orientations)
    expected = topsis_reference(matrix.tolist(), weights.tolist(), orientations)
    assert np.allclose(trace.closeness, expected["v"], atol=1e-9)
    assert trace.ranks.tolist() == expected["ranks"]
    assert np.allclose(trace.dist_pos, expected["d_pos"], atol=1e-9)
    assert np.allclose(trace.dist_neg, expected["d_neg"], atol=1e-9)


@pytest.mark.parametrize("seed", range(CASES))
def test_wp_matches_reference(seed):
    matrix, weights, orientations = _random_problem(seed)
    trace = rank_wp(matrix, weights, orientations)
    expected = wp_reference(matrix.tolist(), weights.tolist(), orientations)
    assert np.allclose(trace.preferences, expected["v"], atol=1e-9)
    assert trace.ranks.tolist() == expected["ranks"]
    assert np.allclose(trace.scores, expected["scores"], atol=1e-9)
