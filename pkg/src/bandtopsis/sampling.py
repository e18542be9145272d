"""Per-criterion weight bands and the randomized weight matrix drawn
from them.

Sampling is counter-based (see kernels.unit_uniforms): entry (i, j) is a
pure function of (seed, i, j, bounds), so the matrix is reproducible
bit-for-bit regardless of fill order or parallel scheduling.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .kernels import unit_uniforms
from .model import NamedWeightSet, RandomWeightMatrix, WeightBounds


def compute_bounds(sets: Sequence[NamedWeightSet]) -> WeightBounds:
    """Element-wise min/max envelope over the given weight sets."""
    if not sets:
        raise ValueError("at least one weight set is required to form bounds")
    n = len(sets[0])
    for s in sets:
        if len(s) != n:
            raise ValueError(
                f"weight set {s.name!r} has length {len(s)}, expected {n}"
            )
    stacked = np.vstack([s.weights for s in sets])
    return WeightBounds(stacked.min(axis=0), stacked.max(axis=0))


def sample_rows(bounds: WeightBounds, seed: int, row_indices: Sequence[int]) -> np.ndarray:
    """Sample the given rows of the weight matrix, in the order requested.

    Row i always reproduces the same values no matter which other rows are
    drawn alongside it; this is the order-independence contract.
    """
    n = bounds.n
    lo, width = bounds.lower, bounds.width
    out = np.empty((len(row_indices), n))
    for k, i in enumerate(row_indices):
        u = unit_uniforms(seed, int(i) * n, n)
        out[k] = lo + u * width
    return out


def sample_weight_matrix(bounds: WeightBounds, iterations: int, seed: int) -> RandomWeightMatrix:
    """Draw the full t x n weight matrix.

    Each entry is uniform on the closed interval [lower_j, upper_j],
    independent across entries. Rows are NOT rescaled to unit sum: the
    closeness computation is invariant under uniform weight scaling, so
    raw band samples rank identically to normalized ones.
    """
    if iterations < 1:
        raise ValueError(f"iterations must be >= 1, got {iterations}")
    n = bounds.n
    u = unit_uniforms(seed, 0, iterations * n).reshape(iterations, n)
    rows = bounds.lower + u * bounds.width
    return RandomWeightMatrix(iterations, rows, int(seed), bounds)
