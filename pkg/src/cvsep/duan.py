"""Bridge between the invariant separability bound and the Duan criterion.

The Duan-style root equation f(r1*) = 0 is solved on the stationarity
curve r2 = r2(r1); separability guarantees a root in [1, 2a], bracketed
between r1 = 1 (where f >= 0) and the analytic squeezer (where f <= 0).
"""

import numpy as np

from .criteria import (ENTANGLED, UNPHYSICAL, RayQuery, UnphysicalParams,
                       separability_verdict)
from .squeezing import analytic_squeeze, r2_of_r1

_BISECT_CAP = 200
_INTERVAL_TOL = 1e-12


class NoRootBracket(RuntimeError):
    """duan_f(sf, 1) < 0: non-canonical input or an entangled state."""


class EntangledInput(ValueError):
    """duan_root requires a separable standard form."""


def duan_margin(sf, r):
    """Margin of the squeezed weaker condition at squeeze factors r.

    sqrt([a r1 + a/r1 - 1][b r2 + b/r2 - 1]) - sqrt(r1 r2)|c1|
    - |c2|/sqrt(r1 r2).  At r = (1, 1) this has the sign of Simon's
    weak margin.
    """
    a, b = sf.a, sf.b
    r1, r2 = float(r.r1), float(r.r2)
    br1 = a * r1 + a / r1 - 1.0
    br2 = b * r2 + b / r2 - 1.0
    if br1 < 0 or br2 < 0:
        # impossible for a, b >= 1/2 and r >= 1
        raise UnphysicalParams(f"negative bracket: {br1}, {br2}")
    rr = np.sqrt(r1 * r2)
    return float(np.sqrt(br1 * br2) - rr * sf.c1 - abs(sf.c2) / rr)


def duan_f(sf, r1):
    """Duan's root function along the stationarity curve.

    f(r1) = (sqrt(r1 r2) - t/sqrt(r1 r2)) |c1|
            - sqrt((a r1 - 1/2)(b r2 - 1/2))
            + sqrt((a/r1 - 1/2)(b/r2 - 1/2))
    with r2 = r2_of_r1(a, b, r1) and t = |c2|/|c1| (t = 0 when c1 = 0).
    """
    a, b = sf.a, sf.b
    r2 = r2_of_r1(a, b, r1)
    rr = r1 * r2
    srr = np.sqrt(rr)
    outer = max((a * r1 - 0.5) * (b * r2 - 0.5), 0.0)
    inner = max((a / r1 - 0.5) * (b / r2 - 0.5), 0.0)
    return float((srr - sf.t / srr) * sf.c1 - np.sqrt(outer) + np.sqrt(inner))


def duan_root(sf, tol=1e-10):
    """Root r1* of duan_f in [1, 2a] for a separable standard form.

    The upper bracket is the analytic squeezer rather than 2a: the
    stationarity analysis guarantees f <= 0 there, while roots sought on
    [1, inf) can violate the squeeze-range part of the P-representation
    condition.  t = 1 and c1 = 0 short-circuit to 1.
    """
    verdict = separability_verdict(sf)
    if verdict.classification in (ENTANGLED, UNPHYSICAL):
        raise EntangledInput(f"state is {verdict.classification}")
    if sf.c1 == 0.0:
        return 1.0
    t = sf.t
    if t >= 1.0 - 1e-12:
        return 1.0

    hi = float(analytic_squeeze(RayQuery(sf.a, sf.b, t)).r1)
    lo = 1.0
    f_lo = duan_f(sf, lo)
    if f_lo < -tol:
        raise NoRootBracket(f"duan_f(1) = {f_lo} < 0")
    f_hi = duan_f(sf, hi)
    if abs(f_hi) <= tol:
        return hi
    if f_hi > 0:
        raise NoRootBracket(f"duan_f({hi}) = {f_hi} > 0")

    mid = 0.5 * (lo + hi)
    for _ in range(_BISECT_CAP):
        mid = 0.5 * (lo + hi)
        f_mid = duan_f(sf, mid)
        if abs(f_mid) <= tol:
            return mid
        if f_mid > 0:
            lo = mid
        else:
            hi = mid
        if hi - lo < _INTERVAL_TOL:
            break
    return mid
