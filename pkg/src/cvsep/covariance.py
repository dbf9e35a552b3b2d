"""Covariance-matrix domain model for two-mode Gaussian states.

Conventions: quadrature order (q1, p1, q2, p2), vacuum-normalized so the
vacuum state has V = I/2.  The standard form is the quadruple
(a, b, c1, c2) with c1 >= |c2| >= 0 and the sign of the product carried
on c2.
"""

from dataclasses import dataclass

import numpy as np

from . import linalg

#: Single-mode symplectic form.
SYMPLECTIC_J = np.array([[0.0, 1.0], [-1.0, 0.0]])

_DET_ONE_TOL = 1e-12


class NonPhysicalBlocks(ValueError):
    """A diagonal block of the covariance matrix has non-positive determinant."""


class InconsistentInvariants(ValueError):
    """The local invariants do not describe any valid covariance matrix."""


@dataclass(frozen=True)
class StandardForm:
    """Canonical quadruple (a, b, c1, c2), with c1 >= |c2| >= 0."""

    a: float
    b: float
    c1: float
    c2: float

    def __post_init__(self):
        if not (self.a > 0 and self.b > 0):
            raise ValueError("a and b must be positive")
        hi = max(abs(self.c1), abs(self.c2))
        lo = min(abs(self.c1), abs(self.c2))
        sign = -1.0 if self.c1 * self.c2 < 0 else 1.0
        object.__setattr__(self, "c1", hi)
        object.__setattr__(self, "c2", sign * lo)

    @property
    def t(self):
        """Correlation ratio |c2|/|c1|, defined as 0 when c1 = 0."""
        return 0.0 if self.c1 == 0.0 else abs(self.c2) / self.c1


@dataclass(frozen=True)
class LocalSymplectic:
    """A pair of single-mode Sp(2,R) elements acting as S1 (+) S2."""

    s1: np.ndarray
    s2: np.ndarray

    def __post_init__(self):
        for name in ("s1", "s2"):
            m = np.asarray(getattr(self, name), dtype=float)
            if m.shape != (2, 2):
                raise ValueError(f"{name} must be 2x2")
            if abs(np.linalg.det(m) - 1.0) > _DET_ONE_TOL:
                raise ValueError(f"{name} must have unit determinant")
            object.__setattr__(self, name, m)

    def full(self):
        s = np.zeros((4, 4))
        s[:2, :2] = self.s1
        s[2:, 2:] = self.s2
        return s


@dataclass(frozen=True)
class SqueezeParams:
    """Per-mode squeeze factors, both >= 1; may hold scalars or arrays."""

    r1: float
    r2: float

    def __post_init__(self):
        if not (np.all(np.asarray(self.r1) >= 1.0 - 1e-12)
                and np.all(np.asarray(self.r2) >= 1.0 - 1e-12)):
            raise ValueError("squeeze parameters must be >= 1")


@dataclass(frozen=True)
class CovarianceMatrix:
    """4x4 symmetric second-moment matrix with positive diagonal."""

    matrix: np.ndarray

    def __post_init__(self):
        m = linalg.sym_matrix(self.matrix)
        if m.shape != (4, 4):
            raise ValueError("covariance matrix must be 4x4")
        if not np.all(np.diag(m) > 0):
            raise ValueError("all diagonal entries must be positive")
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    @classmethod
    def from_standard_form(cls, sf):
        m = np.diag([sf.a, sf.a, sf.b, sf.b]).astype(float)
        m[0, 2] = m[2, 0] = sf.c1
        m[1, 3] = m[3, 1] = sf.c2
        return cls(m)

    @property
    def block_a(self):
        return self.matrix[:2, :2]

    @property
    def block_b(self):
        return self.matrix[2:, 2:]

    @property
    def block_c(self):
        return self.matrix[:2, 2:]


def _omega(ppt):
    """(1/2)(J (+) +-J): the commutation form, momentum-flipped under PPT."""
    y = np.zeros((4, 4))
    y[:2, :2] = SYMPLECTIC_J
    y[2:, 2:] = -SYMPLECTIC_J if ppt else SYMPLECTIC_J
    return 0.5 * y


def uncertainty_check(v, ppt=False, tol=1e-9):
    """Physicality (ppt=False) or PPT positivity (ppt=True) of V.

    Tests V + (i/2)(J (+) +-J) >= 0 via the real embedding; the second
    mode's symplectic form flips sign under partial transposition.
    """
    return linalg.hermitian_psd(v.matrix, _omega(ppt), tol)


def apply_local_symplectic(v, s):
    """Conjugate V by S1 (+) S2: returns S V S^T as a covariance matrix."""
    full = s.full()
    return CovarianceMatrix(full @ v.matrix @ full.T)


def to_standard_form(v, tol=1e-9):
    """Reduce V to its standard form via the four local invariants.

    a = sqrt(det A), b = sqrt(det B); c1^2 and c2^2 are the roots of
    x^2 - Sx + (det C)^2 with S = (a^2 b^2 + (det C)^2 - det V)/(ab),
    which avoids constructing the reducing transformation.
    """
    det_a = float(np.linalg.det(v.block_a))
    det_b = float(np.linalg.det(v.block_b))
    if det_a <= 0 or det_b <= 0:
        raise NonPhysicalBlocks(f"det A = {det_a}, det B = {det_b}")
    a = np.sqrt(det_a)
    b = np.sqrt(det_b)
    det_c = float(np.linalg.det(v.block_c))
    det_v = float(np.linalg.det(v.matrix))

    s = (a * a * b * b + det_c * det_c - det_v) / (a * b)
    disc = s * s - 4.0 * det_c * det_c
    scale = 1.0 + s * s
    if disc < -tol * scale:
        raise InconsistentInvariants(f"negative discriminant {disc}")
    disc = max(disc, 0.0)
    roots = [(s + np.sqrt(disc)) / 2.0, (s - np.sqrt(disc)) / 2.0]
    for i, x in enumerate(roots):
        if x < -tol * (1.0 + abs(s)):
            raise InconsistentInvariants(f"negative squared correlation {x}")
        roots[i] = max(x, 0.0)

    c1 = float(np.sqrt(roots[0]))
    c2 = float(np.sqrt(roots[1]))
    if det_c < 0:
        c2 = -c2
    return StandardForm(a, b, c1, c2)


def squeeze_gram(r):
    """Diagonal Gram matrix S S^T = diag(1/r1, r1, 1/r2, r2)."""
    return np.diag([1.0 / r.r1, r.r1, 1.0 / r.r2, r.r2])
