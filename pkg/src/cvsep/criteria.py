"""Separability and P-representation tests for two-mode Gaussian states.

Implements Simon's two algebraic conditions, the closed-form bound on
the correlation strengths along a ray t = |c2|/|c1|, the quartic whose
smaller root realizes that bound, the P-representation matrix and
eigenvalue conditions, and the quadratic-form condition over arbitrary
probe vectors.

The ray-parameterized functions (big_d, analytic_bound, f_quartic)
accept numpy arrays in the RayQuery fields and broadcast, so dense grid
scans stay vectorized.
"""

from dataclasses import dataclass

import numpy as np

from . import linalg
from .covariance import SYMPLECTIC_J

SEPARABLE = "separable"
ENTANGLED = "entangled"
BOUNDARY = "boundary"
UNPHYSICAL = "unphysical"

_EDGE_TOL = 1e-12


class UnphysicalParams(ValueError):
    """Standard-form parameters outside the physical domain a, b >= 1/2."""


@dataclass(frozen=True)
class RayQuery:
    """A boundary ray: (a, b) with t = |c2|/|c1|.  Fields may be arrays."""

    a: float
    b: float
    t: float

    def __post_init__(self):
        a, b, t = (np.asarray(x, dtype=float) for x in (self.a, self.b, self.t))
        if not (np.all(a >= 0.5 - _EDGE_TOL) and np.all(b >= 0.5 - _EDGE_TOL)):
            raise UnphysicalParams("require a >= 1/2 and b >= 1/2")
        if not np.all((t >= 0.0) & (t <= 1.0 + _EDGE_TOL)):
            raise ValueError("require 0 <= t <= 1")


@dataclass(frozen=True)
class Verdict:
    classification: str
    det_margin: float
    weak_margin: float


@dataclass(frozen=True)
class PrepEigenvalues:
    """Closed-form eigenvalues of V0 - (1/2) S S^T, split by quadrature."""

    lambda1_plus: float
    lambda1_minus: float
    lambda2_plus: float
    lambda2_minus: float
    feasible: bool

    def min_lambda(self):
        return min(self.lambda1_minus, self.lambda2_minus)


@dataclass(frozen=True)
class ProbeVectors:
    """Four real 2-vectors probing the quadratic-form condition."""

    d: np.ndarray
    f: np.ndarray
    g: np.ndarray
    h: np.ndarray

    def __post_init__(self):
        for name in ("d", "f", "g", "h"):
            vec = np.asarray(getattr(self, name), dtype=float)
            if vec.shape != (2,) or not np.all(np.isfinite(vec)):
                raise ValueError(f"{name} must be a finite real 2-vector")
            object.__setattr__(self, name, vec)


def simon_margins(sf):
    """Margins of Simon's two separability conditions.

    det_margin = 4(ab - c1^2)(ab - c2^2) - (a^2 + b^2) - 2|c1 c2| + 1/4
    weak_margin = sqrt((2a-1)(2b-1)) - (|c1| + |c2|)

    Both are non-negative exactly on the separable set.
    """
    a, b, c1, c2 = sf.a, sf.b, sf.c1, sf.c2
    if a < 0.5 - _EDGE_TOL or b < 0.5 - _EDGE_TOL:
        raise UnphysicalParams("weak margin undefined for a < 1/2 or b < 1/2")
    ab = a * b
    det_margin = (4.0 * (ab - c1 * c1) * (ab - c2 * c2)
                  - (a * a + b * b) - 2.0 * abs(c1 * c2) + 0.25)
    weak_margin = (np.sqrt(max(2.0 * a - 1.0, 0.0) * max(2.0 * b - 1.0, 0.0))
                   - (abs(c1) + abs(c2)))
    return float(det_margin), float(weak_margin)


def standard_form_physical(sf, tol=1e-9):
    """Physicality of the standard form, in closed form.

    Equivalent to uncertainty_check(V0, ppt=False) but O(1): requires
    a, b >= 1/2, PSD 2x2 blocks, and the smaller symplectic eigenvalue
    >= 1/2, which for the standard form reads
    4 det V >= (a^2 + b^2 + 2 c1 c2) - 1/4 with the signed product,
    together with a^2 + b^2 + 2 c1 c2 >= 1/2.
    """
    a, b, c1, c2 = sf.a, sf.b, sf.c1, sf.c2
    ab = a * b
    scale = 1.0 + ab
    band = tol * scale
    if a < 0.5 - band or b < 0.5 - band:
        return False
    if ab - c1 * c1 < -band or ab - c2 * c2 < -band:
        return False
    delta = a * a + b * b + 2.0 * c1 * c2
    if delta < 0.5 - band:
        return False
    signed = (4.0 * (ab - c1 * c1) * (ab - c2 * c2)
              - delta + 0.25)
    return signed >= -band


def separability_verdict(sf, tol=1e-9):
    """Classify a standard form as unphysical/separable/entangled/boundary.

    Tolerances are relative with scale = 1 + a*b; Boundary is flagged
    when the smaller margin sits inside the +-tol band while the other
    stays non-negative.
    """
    scale = 1.0 + sf.a * sf.b
    band = tol * scale
    if not standard_form_physical(sf, tol):
        if sf.a >= 0.5 - band and sf.b >= 0.5 - band:
            det_m, weak_m = simon_margins(sf)
        else:
            det_m, weak_m = float("nan"), float("nan")
        return Verdict(UNPHYSICAL, det_m, weak_m)

    det_m, weak_m = simon_margins(sf)
    lo, hi = min(det_m, weak_m), max(det_m, weak_m)
    if abs(lo) <= band and hi >= -band:
        cls = BOUNDARY
    elif lo >= -band:
        cls = SEPARABLE
    else:
        cls = ENTANGLED
    return Verdict(cls, det_m, weak_m)


def big_d(q):
    """Auxiliary quantity D(a,b,t) = a^2 b^2 (1-t^2)^2 + t(a+bt)(at+b)."""
    a, b, t = q.a, q.b, q.t
    one_minus = 1.0 - t * t
    return (a * a * b * b * one_minus * one_minus
            + t * (a + b * t) * (a * t + b))


def analytic_bound(q):
    """Largest (c1^2, c2^2) compatible with separability along the ray.

    Computed in the cancellation-free conjugate form
        c1^2_max = 4 (a^2 - 1/4)(b^2 - 1/4) / (S + 2 sqrt(D)),
    S = 2ab(1+t^2) + t, identical to the direct expression
    {S - 2 sqrt(D)} / (4 t^2) and exact in the t -> 0 limit
    (a - 1/(4a))(b - 1/(4b)).
    """
    a, b, t = q.a, q.b, q.t
    d = np.maximum(big_d(q), 0.0)
    s = 2.0 * a * b * (1.0 + t * t) + t
    c1sq = 4.0 * (a * a - 0.25) * (b * b - 0.25) / (s + 2.0 * np.sqrt(d))
    c1sq = np.maximum(c1sq, 0.0)
    return c1sq, t * t * c1sq


def f_quartic(c1sq, q):
    """Simon's first condition along the ray, as a function of c1^2.

    f(x) = 4(ab - x)(ab - t^2 x) - (a^2 + b^2) - 2tx + 1/4; its smaller
    non-negative root is the analytic bound.
    """
    a, b, t = q.a, q.b, q.t
    ab = a * b
    return (4.0 * (ab - c1sq) * (ab - t * t * c1sq)
            - (a * a + b * b) - 2.0 * t * c1sq + 0.25)


def prep_check(v, tol=1e-9):
    """P-representability of V: true iff V - I/2 >= 0."""
    return linalg.is_psd(v.matrix - 0.5 * np.eye(4), tol)


def prep_eigensystem(sf, r, tol=1e-9):
    """Closed-form eigenvalues of V0 - (1/2) diag(1/r1, r1, 1/r2, r2).

    The matrix splits into a q-quadrature block (couples a - 1/(2 r1),
    b - 1/(2 r2) through c1) and a p-quadrature block (couples a - r1/2,
    b - r2/2 through c2).  Feasible iff all four eigenvalues >= -tol.
    """
    a, b = sf.a, sf.b
    u = a - 0.5 / r.r1
    v = b - 0.5 / r.r2
    w = a - 0.5 * r.r1
    x = b - 0.5 * r.r2
    root1 = np.sqrt((u - v) ** 2 + 4.0 * sf.c1 * sf.c1)
    root2 = np.sqrt((w - x) ** 2 + 4.0 * sf.c2 * sf.c2)
    l1p = 0.5 * ((u + v) + root1)
    l1m = 0.5 * ((u + v) - root1)
    l2p = 0.5 * ((w + x) + root2)
    l2m = 0.5 * ((w + x) - root2)
    feasible = bool(min(l1m, l2m) >= -tol)
    return PrepEigenvalues(float(l1p), float(l1m), float(l2p), float(l2m), feasible)


def condition6_margin(v, p):
    """Margin of the quadratic-form separability condition.

    d'Ad + f'Bf + 2d'Cf + g'Ag + h'Bh + 2g'Ch - |d'Jg| - |f'Jh|;
    non-negative for all probe vectors iff the state is separable.
    """
    a_blk, b_blk, c_blk = v.block_a, v.block_b, v.block_c
    j = SYMPLECTIC_J
    d, f, g, h = p.d, p.f, p.g, p.h
    quad = (d @ a_blk @ d + f @ b_blk @ f + 2.0 * (d @ c_blk @ f)
            + g @ a_blk @ g + h @ b_blk @ h + 2.0 * (g @ c_blk @ h))
    return float(quad - abs(d @ j @ g) - abs(f @ j @ h))
