"""Hot numeric kernels: batch weighted-distance evaluation and row ranking.

Each kernel exists twice, a numba @njit build and a pure-numpy build.
The njit build is used when numba imports cleanly; set the environment
variable ``BANDTOPSIS_NO_NUMBA=1`` before import to force the numpy path
(useful for debugging and for the benchmark comparison). Both builds
implement identical arithmetic; closeness values agree to ~1e-15 and the
rank tie policy (descending closeness, ties by ascending alternative
index) is shared.
"""

from __future__ import annotations

import os

import numpy as np

_env = os.environ.get("BANDTOPSIS_NO_NUMBA", "").strip().lower()
_DISABLED = _env not in ("", "0", "false")

_HAVE_NUMBA = False
if not _DISABLED:
    try:
        from numba import njit

        _HAVE_NUMBA = True
    except ImportError:  # pragma: no cover - exercised via env flag instead
        _HAVE_NUMBA = False


def active_backend() -> str:
    """Name of the kernel build in use: 'numba' or 'numpy'."""
    return "numba" if _HAVE_NUMBA else "numpy"


# ---------------------------------------------------------------- distances

def batch_distances_numpy(V, a_pos, a_neg, w_rows):
    """Weighted Euclidean distances of every alternative to both ideals,
    for every weight row.

    d_plus[t, i] = sqrt(sum_j w[t, j] * (V[i, j] - a_pos[j])^2), same for
    d_minus against a_neg. Weights sit inside the root, multiplying the
    squared deviations.
    """
    dp2 = np.einsum("tj,ij->ti", w_rows, (V - a_pos) ** 2)
    dm2 = np.einsum("tj,ij->ti", w_rows, (V - a_neg) ** 2)
    return np.sqrt(dp2), np.sqrt(dm2)


def _batch_distances_loops(V, a_pos, a_neg, w_rows):
    t = w_rows.shape[0]
    m, n = V.shape
    dp = np.empty((t, m))
    dm = np.empty((t, m))
    for k in range(t):
        for i in range(m):
            sp = 0.0
            sm = 0.0
            for j in range(n):
                ep = V[i, j] - a_pos[j]
                em = V[i, j] - a_neg[j]
                sp += w_rows[k, j] * ep * ep
                sm += w_rows[k, j] * em * em
            dp[k, i] = np.sqrt(sp)
            dm[k, i] = np.sqrt(sm)
    return dp, dm


# ------------------------------------------------------------------ ranking

def rank_rows_numpy(xi):
    """1-based rank of every closeness row, descending, ties to the
    lower alternative index (stable sort on the negated values)."""
    t, m = xi.shape
    order = np.argsort(-xi, axis=1, kind="stable")
    ranks = np.empty((t, m), dtype=np.int64)
    rows = np.arange(t)[:, None]
    ranks[rows, order] = np.arange(1, m + 1)
    return ranks


def _rank_rows_loops(xi):
    t, m = xi.shape
    ranks = np.empty((t, m), dtype=np.int64)
    for k in range(t):
        for i in range(m):
            r = 1
            for j in range(m):
                if xi[k, j] > xi[k, i] or (xi[k, j] == xi[k, i] and j < i):
                    r += 1
            ranks[k, i] = r
    return ranks


if _HAVE_NUMBA:
    batch_distances_numba = njit(cache=True)(_batch_distances_loops)
    rank_rows_numba = njit(cache=True)(_rank_rows_loops)
    batch_distances = batch_distances_numba
    rank_rows = rank_rows_numba
else:
    batch_distances = batch_distances_numpy
    rank_rows = rank_rows_numpy


# --------------------------------------------------- counter-based uniforms

_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_U64 = np.uint64(0xFFFFFFFFFFFFFFFF)


def unit_uniforms(seed: int, start: int, count: int) -> np.ndarray:
    """Counter-based uniform doubles in [0, 1).

    Value k of the stream is splitmix64 output number (start + k) for the
    given seed: mix64(seed + (start + k + 1) * 0x9E3779B97F4A7C15), taking
    the top 53 bits as the mantissa. A value depends only on (seed, index),
    never on evaluation order, so any slice of the stream can be
    regenerated independently and bit-identically on any platform.
    """
    counters = np.arange(start, start + count, dtype=np.uint64)
    z = (np.uint64(int(seed) & int(_U64)) + (counters + np.uint64(1)) * _GAMMA)
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    z = z ^ (z >> np.uint64(31))
    return (z >> np.uint64(11)).astype(np.float64) * 2.0 ** -53
