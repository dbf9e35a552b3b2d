"""Closed-form squeezing parameters and the boundary-coincidence identity.

The central result: the squeeze factors

    r1 = {ab(1 - t^2) + sqrt(D)} / (at + b)
    r2 = {ab(1 - t^2) + sqrt(D)} / (a + bt)

make the P-representation feasibility boundary coincide with the
invariant separability bound on every ray t = |c2|/|c1|.  All functions
broadcast over array-valued RayQuery fields.
"""

import numpy as np

from .covariance import SqueezeParams
from .criteria import analytic_bound, big_d


class DomainError(ValueError):
    """Argument outside the domain where the closed form is defined."""


def analytic_squeeze(q):
    """Squeezing parameters extremizing the P-representation condition.

    Guarantees 1 <= r1 <= 2a and 1 <= r2 <= 2b, with r1 = r2 = 1 at
    t = 1 and (r1, r2) = (2a, 2b) at t = 0.
    """
    a, b, t = q.a, q.b, q.t
    num = a * b * (1.0 - t * t) + np.sqrt(np.maximum(big_d(q), 0.0))
    r1 = np.maximum(num / (a * t + b), 1.0)
    r2 = np.maximum(num / (a + b * t), 1.0)
    return SqueezeParams(r1, r2)


def r2_of_r1(a, b, r1):
    """The stationarity-curve partner of r1.

    r2(r1) = 4b / [sqrt((1-X)^2 + 16 b^2 X) + (1-X)] with
    X = (2a/r1 - 1)/(2a r1 - 1); satisfies r2(1) = 1 and r2(2a) = 2b.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    r1 = np.asarray(r1, dtype=float)
    if np.any(r1 < 1.0 - 1e-9) or np.any(r1 > 2.0 * a + 1e-9):
        raise DomainError("require 1 <= r1 <= 2a")
    den = 2.0 * a * r1 - 1.0
    # den -> 0 only at a = 1/2, r1 = 1, where r2 = 1.
    degenerate = den <= 1e-14
    x = np.maximum((2.0 * a / r1 - 1.0) / np.where(degenerate, 1.0, den), 0.0)
    one_minus = 1.0 - x
    r2 = 4.0 * b / (np.sqrt(one_minus * one_minus + 16.0 * b * b * x) + one_minus)
    r2 = np.where(degenerate, 1.0, r2)
    return float(r2) if r2.ndim == 0 else r2


def stationarity_residuals(q, r):
    """Residuals of the stationarity system at (r1, r2).

    res_ratio is the cross-multiplied ratio condition; res_fix1/res_fix2
    are the fixed-point forms, undefined at t = 0 (returned as None).
    All three vanish at the analytic solution.
    """
    a, b, t = float(q.a), float(q.b), float(q.t)
    r1, r2 = float(r.r1), float(r.r2)
    res_ratio = ((a * r1 - 0.5) * (b / r2 - 0.5)
                 - (b * r2 - 0.5) * (a / r1 - 0.5))
    if t == 0.0:
        return res_ratio, None, None
    res_fix1 = r1 - (r2 * a / t + 0.5) / (a + r2 / (2.0 * t))
    res_fix2 = r2 - (r1 * b / t + 0.5) / (b + r1 / (2.0 * t))
    return res_ratio, res_fix1, res_fix2


def boundary_identity(q):
    """The three coinciding boundary values along a ray with t > 0.

    At the analytic squeezers, the two P-representation products and the
    invariant separability bound are one and the same number:

        (a - 1/(2 r1))(b - 1/(2 r2))
      = (1/t^2)(a - r1/2)(b - r2/2)
      = {[2ab(1+t^2) + t] - 2 sqrt(D)} / (4 t^2).
    """
    t = np.asarray(q.t, dtype=float)
    if np.any(t <= 0.0):
        raise DomainError("identity degenerates at t = 0; use analytic_bound")
    a, b = q.a, q.b
    r = analytic_squeeze(q)
    lhs_outer = (a - 0.5 / r.r1) * (b - 0.5 / r.r2)
    lhs_inner = (a - 0.5 * r.r1) * (b - 0.5 * r.r2) / (t * t)
    rhs = analytic_bound(q)[0]
    return lhs_outer, lhs_inner, rhs


def sqrt_identity(q):
    """Square-root form of the boundary identity, t > 0.

    term1 = sqrt((a r1 - 1/2)(b r2 - 1/2)) / sqrt(r1 r2)
    term2 = sqrt((a/r1 - 1/2)(b/r2 - 1/2)) / (t / sqrt(r1 r2))
    rhs_root = (1/2t) {[2ab(1+t^2) + t] - 2 sqrt(D)}^(1/2)
    """
    t = np.asarray(q.t, dtype=float)
    if np.any(t <= 0.0):
        raise DomainError("identity degenerates at t = 0")
    a, b = q.a, q.b
    r = analytic_squeeze(q)
    rr = r.r1 * r.r2
    term1 = np.sqrt(np.maximum((a * r.r1 - 0.5) * (b * r.r2 - 0.5), 0.0) / rr)
    # a/r1 - 1/2 suffers cancellation as t -> 0 (both terms -> 1/2), so
    # use the conjugate form 2a - r1 = t(4a^2-1)(a+bt)/(K + sqrt(D)) with
    # K = 2a^2 t + ab(1+t^2), exact by the same algebra that defines r1.
    root_d = np.sqrt(np.maximum(big_d(q), 0.0))
    ab_part = a * b * (1.0 + t * t)
    u = (t * (4.0 * a * a - 1.0) * (a + b * t)
         / (2.0 * r.r1 * (2.0 * a * a * t + ab_part + root_d)))
    v = (t * (4.0 * b * b - 1.0) * (a * t + b)
         / (2.0 * r.r2 * (2.0 * b * b * t + ab_part + root_d)))
    term2 = np.sqrt(np.maximum(u * v, 0.0)) * np.sqrt(rr) / t
    rhs_root = np.sqrt(analytic_bound(q)[0])
    return term1, term2, rhs_root
