"""Unit tests for the small symmetric eigensolver."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cvsep import linalg


def test_sym_matrix_symmetrizes():
    m = linalg.sym_matrix([[1.0, 2.0], [0.0, 3.0]])
    assert np.allclose(m, [[1.0, 1.0], [1.0, 3.0]])


@pytest.mark.parametrize("bad", [np.ones((3, 3)), np.ones((2, 4)),
                                 np.full((2, 2), np.nan)])
def test_sym_matrix_rejects_bad_input(bad):
    with pytest.raises(ValueError):
        linalg.sym_matrix(bad)


def test_eigenvalues_of_diagonal():
    w = linalg.sym_eigenvalues(np.diag([3.0, -1.0, 2.0, 0.5]))
    assert np.allclose(w, [-1.0, 0.5, 2.0, 3.0])


def test_eigenvalues_known_2x2():
    w = linalg.sym_eigenvalues(np.array([[2.0, 1.0], [1.0, 2.0]]))
    assert np.allclose(w, [1.0, 3.0])


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2 ** 32 - 1))
def test_eigenvalues_match_numpy(seed):
    rng = np.random.default_rng(seed)
    for n in (2, 4, 8):
        m = rng.normal(size=(n, n))
        m = m + m.T
        assert np.allclose(linalg.sym_eigenvalues(m), np.linalg.eigvalsh(m),
                           atol=1e-10 * (1.0 + np.abs(m).max()))


def test_batched_matches_single():
    rng = np.random.default_rng(0)
    stack = rng.normal(size=(64, 4, 4))
    stack = stack + np.swapaxes(stack, 1, 2)
    batched = linalg.jacobi_eigenvalues(stack)
    for i in range(64):
        assert np.allclose(batched[i], linalg.jacobi_eigenvalues(stack[i]))


def test_eigenvalue_sum_and_product_invariants():
    rng = np.random.default_rng(1)
    m = rng.normal(size=(8, 8))
    m = m + m.T
    w = linalg.sym_eigenvalues(m)
    assert np.isclose(w.sum(), np.trace(m))
    assert np.isclose(np.prod(w), np.linalg.det(m), rtol=1e-8)


def test_is_psd_relative_tolerance():
    assert linalg.is_psd(np.diag([1.0, 0.0]))
    assert not linalg.is_psd(np.diag([1.0, -1e-6]), tol=1e-9)
    # -1e-7 is within a 1e-9 *relative* band when the top eigenvalue is 1e3
    assert linalg.is_psd(np.diag([1e3, -1e-7]), tol=1e-9)
    with pytest.raises(ValueError):
        linalg.is_psd(np.eye(2), tol=-1.0)


def test_hermitian_psd_matches_complex_eigensolver():
    rng = np.random.default_rng(2)
    for _ in range(25):
        x = rng.normal(size=(4, 4))
        x = x + x.T + 4.0 * np.eye(4)
        y = rng.normal(size=(4, 4))
        y = y - y.T
        expected = bool(np.linalg.eigvalsh(x + 1j * y)[0] >= -1e-12)
        assert linalg.hermitian_psd(x, y, tol=1e-12) == expected


def test_hermitian_psd_rejects_symmetric_y():
    with pytest.raises(ValueError):
        linalg.hermitian_psd(np.eye(2), np.eye(2))
