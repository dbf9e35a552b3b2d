"""Dense linear-algebra kernels for small symmetric matrices (n <= 8).

Eigenvalues are computed with cyclic Jacobi rotations, which are
deterministic and accurate to machine precision at these sizes.  The
solver accepts stacks of matrices so that large verification batches
run vectorized.
"""

import numpy as np

ALLOWED_DIMS = (2, 4, 8)

# Convergence: off-diagonal Frobenius norm below _OFF_TOL * ||M||_F.
_OFF_TOL = 1e-14
_SWEEP_CAP = 100


def sym_matrix(entries):
    """Validate and symmetrize a square matrix of dimension 2, 4 or 8."""
    a = np.array(entries, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] not in ALLOWED_DIMS:
        raise ValueError(f"dimension must be one of {ALLOWED_DIMS}, got {a.shape[0]}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    return 0.5 * (a + a.T)


def jacobi_eigenvalues(mats):
    """Eigenvalues of one symmetric matrix or a stack of them.

    Accepts shape (n, n) or (m, n, n) and returns ascending eigenvalues
    of shape (n,) or (m, n).  Raises RuntimeError if the sweep cap is
    exceeded, which signals a bug rather than a data problem: Jacobi
    always converges for symmetric input.
    """
    a = np.asarray(mats, dtype=float)
    single = a.ndim == 2
    if single:
        a = a[None]
    m, n, n2 = a.shape
    if n != n2:
        raise ValueError(f"expected square matrices, got shape {a.shape}")
    a = 0.5 * (a + np.swapaxes(a, 1, 2))  # guard against asymmetric input

    norm = np.sqrt((a * a).sum(axis=(1, 2)))
    thresh = _OFF_TOL * norm
    off_mask = ~np.eye(n, dtype=bool)

    for _ in range(_SWEEP_CAP):
        off = np.sqrt((a[:, off_mask] ** 2).sum(axis=1))
        if np.all(off <= thresh):
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[:, p, q]
                skip = np.abs(apq) < 1e-300
                denom = np.where(skip, 1.0, 2.0 * apq)
                tau = (a[:, q, q] - a[:, p, p]) / denom
                t = np.sign(tau) / (np.abs(tau) + np.sqrt(1.0 + tau * tau))
                t = np.where(tau == 0.0, 1.0, t)
                t = np.where(skip, 0.0, t)
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                cp, sp = c[:, None], s[:, None]
                colp = a[:, :, p].copy()
                colq = a[:, :, q].copy()
                a[:, :, p] = cp * colp - sp * colq
                a[:, :, q] = sp * colp + cp * colq
                rowp = a[:, p, :].copy()
                rowq = a[:, q, :].copy()
                a[:, p, :] = cp * rowp - sp * rowq
                a[:, q, :] = sp * rowp + cp * rowq
    else:
        raise RuntimeError("Jacobi eigensolver failed to converge (internal bug)")

    eig = np.sort(np.diagonal(a, axis1=1, axis2=2), axis=1)
    return eig[0] if single else eig


def sym_eigenvalues(m):
    """Ascending eigenvalues of a symmetric matrix."""
    return jacobi_eigenvalues(m)


def is_psd(m, tol=0.0):
    """Positive-semidefiniteness with a relative tolerance.

    True iff the smallest eigenvalue is >= -tol * (1 + |largest eigenvalue|),
    so verdicts are stable across matrix magnitudes.
    """
    if tol < 0:
        raise ValueError("tol must be non-negative")
    w = sym_eigenvalues(m)
    return bool(w[0] >= -tol * (1.0 + abs(w[-1])))


def hermitian_psd(x, y, tol=0.0):
    """Decide X + iY >= 0 for symmetric X and antisymmetric Y.

    Uses the real embedding [[X, -Y], [Y, X]], whose spectrum is the
    doubled spectrum of X + iY.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 2 or x.shape[0] != x.shape[1]:
        raise ValueError(f"dimension mismatch: X {x.shape}, Y {y.shape}")
    if not np.allclose(y, -y.T, atol=1e-12 * (1.0 + np.abs(y).max())):
        raise ValueError("Y must be antisymmetric")
    n = x.shape[0]
    emb = np.empty((2 * n, 2 * n))
    emb[:n, :n] = x
    emb[:n, n:] = -y
    emb[n:, :n] = y
    emb[n:, n:] = x
    return is_psd(emb, tol)
