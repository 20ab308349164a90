"""Exact permanents of complex square matrices.

The permanent is the numerical kernel behind every interferometer
amplitude in this package. Two independent routes are provided:

* :func:`permanent_ryser` -- Ryser's inclusion-exclusion formula with
  Gray-code subset iteration, O(2^k * k). The production path.
* :func:`permanent_naive` -- direct sum over all k! permutations. Kept
  deliberately simple so it can serve as an oracle for the fast path.

Both define the permanent of the empty (0x0) matrix as 1, which makes
products over empty spectral modes well-defined downstream.
"""

from itertools import permutations

import numpy as np

from .errors import CapacityError, DimensionError

# 2^30 subsets is the practical desk-scale ceiling; refuse anything larger.
RYSER_DIMENSION_CAP = 30
NAIVE_DIMENSION_CAP = 10


def _as_square(matrix) -> np.ndarray:
    a = np.asarray(matrix, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"permanent needs a square matrix, got shape {a.shape}")
    if a.size and not np.all(np.isfinite(a)):
        raise DimensionError("matrix entries must be finite (no NaN/Inf)")
    return a


def permanent_ryser(matrix, cap: int = RYSER_DIMENSION_CAP) -> complex:
    """Permanent of a complex square matrix via Ryser's formula.

    Subsets of columns are visited in Gray-code order so each step
    updates the running row sums with a single column add/subtract.

    Args:
        matrix: square array-like with finite complex entries.
        cap: hard dimension limit; above it a CapacityError is raised
            rather than silently starting a multi-hour sum.

    Returns:
        Per(matrix) as a Python complex. The 0x0 permanent is 1.
    """
    a = _as_square(matrix)
    k = a.shape[0]
    if k == 0:
        return complex(1.0)
    if k > cap:
        raise CapacityError(f"permanent dimension {k} exceeds cap {cap} (2^{k} subsets)")

    # Per(A) = (-1)^k sum_{S != {}} (-1)^|S| prod_i sum_{j in S} A[i, j].
    # In Gray-code order |S| changes by one per step, so the subset sign
    # simply alternates: (-1)^|S(t)| = (-1)^t.
    row_sums = np.zeros(k, dtype=np.complex128)
    gray = 0
    total = 0.0 + 0.0j
    for t in range(1, 1 << k):
        new_gray = t ^ (t >> 1)
        changed = new_gray ^ gray
        j = changed.bit_length() - 1
        if new_gray & changed:
            row_sums += a[:, j]
        else:
            row_sums -= a[:, j]
        gray = new_gray
        term = complex(np.prod(row_sums))
        total = total + term if (t & 1) == 0 else total - term
    if k & 1:
        total = -total
    return total


def permanent_naive(matrix, cap: int = NAIVE_DIMENSION_CAP) -> complex:
    """Permanent by brute-force summation over all k! permutations.

    Oracle implementation: independent of the Ryser path, so agreement
    between the two is a meaningful check.
    """
    a = _as_square(matrix)
    k = a.shape[0]
    if k == 0:
        return complex(1.0)
    if k > cap:
        raise CapacityError(f"naive permanent dimension {k} exceeds cap {cap} ({k}! terms)")

    rows = range(k)
    total = 0.0 + 0.0j
    for perm in permutations(range(k)):
        term = 1.0 + 0.0j
        for i in rows:
            term *= a[i, perm[i]]
        total += term
    return complex(total)
