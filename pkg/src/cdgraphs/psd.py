"""Positive-semidefiniteness decisions for symmetric matrices.

Exact matrices (numpy object arrays of ``Fraction``) go through pivoted
LDLᵀ elimination; float matrices through the smallest eigenvalue with a
scale-aware tolerance.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

PSD_EPS = 1e-9


def is_psd_exact(matrix) -> bool:
    """Exact PSD test by symmetric elimination with diagonal pivoting.

    At every step a zero diagonal entry must have an all-zero row (otherwise
    a 2×2 minor is negative); such rows are dropped. The largest positive
    diagonal entry is then used as pivot. A negative diagonal entry at any
    step certifies indefiniteness.
    """
    a = [[Fraction(v) for v in row] for row in np.asarray(matrix, dtype=object).tolist()]
    while a:
        size = len(a)
        keep = []
        for i in range(size):
            d = a[i][i]
            if d < 0:
                return False
            if d == 0:
                if any(a[i][j] != 0 for j in range(size)):
                    return False
            else:
                keep.append(i)
        if not keep:
            return True
        a = [[a[i][j] for j in keep] for i in keep]
        size = len(a)
        p = max(range(size), key=lambda i: a[i][i])
        pivot = a[p][p]
        col = a[p]
        rest = [i for i in range(size) if i != p]
        a = [[a[i][j] - col[i] * col[j] / pivot for j in rest] for i in rest]
    return True


def min_eigenvalue(matrix) -> float:
    m = np.asarray(matrix, dtype=float)
    if m.size == 0:
        return 0.0
    return float(np.linalg.eigvalsh(m)[0])


def is_psd_float(matrix, eps: float = PSD_EPS) -> bool:
    """``λ_min ≥ -eps * max(1, max|entry|)``."""
    m = np.asarray(matrix, dtype=float)
    if m.size == 0:
        return True
    scale = max(1.0, float(np.max(np.abs(m))))
    return min_eigenvalue(m) >= -eps * scale


def is_psd(matrix, exact: bool | None = None, eps: float = PSD_EPS) -> bool:
    arr = np.asarray(matrix)
    if exact is None:
        exact = arr.dtype == object
    return is_psd_exact(arr) if exact else is_psd_float(arr, eps)


def schur_eliminate(matrix, keep: int):
    """Minimise the quadratic form over coordinates ``keep:`` and return the reduced form.

    Coordinates past ``keep`` are eliminated one at a time by Gaussian
    elimination; each pivot must be strictly positive, which is the case for
    the ``S_2`` block of a local Γ₂ form.
    """
    m = np.array(matrix, copy=True)
    for k in range(m.shape[0] - 1, keep - 1, -1):
        pivot = m[k, k]
        if not pivot > 0:
            raise ArithmeticError("non-positive pivot in elimination block")
        col = m[:k, k]
        m = m[:k, :k] - np.outer(col, col) / pivot
    return m
