from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cdgraphs.psd import is_psd, is_psd_exact, is_psd_float, schur_eliminate


def F(rows):
    return np.array([[Fraction(v) for v in r] for r in rows], dtype=object)


@pytest.mark.parametrize(
    "rows, expected",
    [
        ([[1, 0], [0, 0]], True),
        ([[0, 1], [1, 0]], False),
        ([[1, 1], [1, 1]], True),
        ([[1, 1], [1, Fraction(99, 100)]], False),
        ([[0, 0], [0, 0]], True),
        ([[2, -1, 0], [-1, 2, -1], [0, -1, 2]], True),
        ([[1, 2, 0], [2, 4, 0], [0, 0, 0]], True),
        ([[1, 2, 0], [2, 4, 1], [0, 1, 0]], False),
        ([[-1]], False),
        ([], True),
    ],
)
def test_exact_examples(rows, expected):
    m = F(rows) if rows else np.zeros((0, 0), dtype=object)
    assert is_psd_exact(m) is expected


def test_exact_boundary_rank_one():
    v = np.array([Fraction(1), Fraction(-2), Fraction(3)], dtype=object)
    assert is_psd_exact(np.outer(v, v))
    m = np.outer(v, v)
    m[0, 0] -= Fraction(1, 10**30)
    assert not is_psd_exact(m)


def test_float_tolerance_scales():
    m = np.diag([1e6, -1e-4])
    assert is_psd_float(m)
    assert not is_psd_float(np.diag([1.0, -1e-6]))


small_ints = st.integers(-4, 4)


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(small_ints, min_size=n * n, max_size=n * n).map(lambda xs: (n, xs))))
def test_exact_matches_gram_and_eigen(data):
    n, xs = data
    b = np.array(xs, dtype=float).reshape(n, n)
    # random symmetric integer matrix: exact verdict agrees with eigenvalues when clearly away from zero
    sym = b + b.T
    eig = np.linalg.eigvalsh(sym).min()
    exact = is_psd_exact(F(sym.astype(int).tolist()))
    if abs(eig) > 1e-9:
        assert exact == (eig > 0)
    # Gram matrices are PSD
    gram = (b @ b.T).astype(int)
    assert is_psd_exact(F(gram.tolist()))


def test_schur_eliminate_minimises():
    rng = np.random.default_rng(3)
    a = rng.normal(size=(5, 5))
    m = a @ a.T + np.eye(5)
    red = schur_eliminate(m, 2)
    y = rng.normal(size=2)
    # minimiser over the trailing block
    z = -np.linalg.solve(m[2:, 2:], m[2:, :2] @ y)
    full = np.concatenate([y, z])
    assert np.isclose(y @ red @ y, full @ m @ full)


def test_dispatch_on_dtype():
    assert is_psd(F([[1]])) and is_psd(np.eye(2))
