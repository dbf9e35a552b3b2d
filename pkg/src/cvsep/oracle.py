"""Brute-force verifiers and seeded random generators.

Everything here is the independent side of a cross-check: the numeric
bound comes from bisection on the quartic, never from the closed form;
probe minimization exercises the raw quadratic-form condition.  The RNG
is a self-contained splitmix64 so runs reproduce bit-for-bit across
platforms.
"""

from dataclasses import dataclass

import numpy as np

from .covariance import LocalSymplectic, StandardForm
from .criteria import (RayQuery, analytic_bound, condition6_margin,
                       f_quartic, ProbeVectors, SYMPLECTIC_J)

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """Deterministic 64-bit generator; state advances by a fixed gamma."""

    def __init__(self, seed):
        self._state = int(seed) & _MASK64

    def next_u64(self):
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def uniform(self, lo=0.0, hi=1.0):
        u = (self.next_u64() >> 11) * 2.0 ** -53
        return lo + (hi - lo) * u

    def uniform_array(self, shape, lo=0.0, hi=1.0):
        """Vectorized draw; advances the state by the number of samples."""
        count = int(np.prod(shape))
        with np.errstate(over="ignore"):
            steps = np.arange(1, count + 1, dtype=np.uint64)
            z = np.uint64(self._state) + np.uint64(_GAMMA) * steps
            z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
            z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
            z = z ^ (z >> np.uint64(31))
        self._state = (self._state + count * _GAMMA) & _MASK64
        u = (z >> np.uint64(11)).astype(float) * 2.0 ** -53
        return (lo + (hi - lo) * u).reshape(shape)


@dataclass(frozen=True)
class RandomSpec:
    """Sampling ranges for random standard forms; lower ends >= 1/2."""

    seed: int = 42
    a_range: tuple = (0.5, 3.0)
    b_range: tuple = (0.5, 3.0)
    t_range: tuple = (0.0, 1.0)
    fraction_boundary: float = 0.0

    def __post_init__(self):
        if self.a_range[0] < 0.5 or self.b_range[0] < 0.5:
            raise ValueError("a and b ranges must start at >= 1/2")
        if not (0.0 <= self.t_range[0] <= self.t_range[1] <= 1.0):
            raise ValueError("t range must lie within [0, 1]")
        if not 0.0 <= self.fraction_boundary <= 1.0:
            raise ValueError("fraction_boundary must be in [0, 1]")


def numeric_c1_bound(q, tol=1e-10):
    """Largest c1^2 keeping f_quartic >= 0 on [0, c1^2], by bisection.

    Bisects between 0 (where f >= 0) and the quartic's interior minimum,
    then intersects with the weaker constraint (2a-1)(2b-1)/(1+t)^2.
    Broadcasts over array-valued RayQuery fields.  Entirely independent
    of the closed-form bound.
    """
    a = np.asarray(q.a, dtype=float)
    b = np.asarray(q.b, dtype=float)
    t = np.asarray(q.t, dtype=float)
    a, b, t = np.broadcast_arrays(a, b, t)
    scalar = a.ndim == 0
    a, b, t = np.atleast_1d(a), np.atleast_1d(b), np.atleast_1d(t)
    qv = RayQuery(a, b, t)

    weaker = (2.0 * a - 1.0) * (2.0 * b - 1.0) / (1.0 + t) ** 2
    s = 2.0 * a * b * (1.0 + t * t) + t
    # f has its (negative) minimum at s/(4t^2); at t = 0 it is linear in
    # c1^2 and already negative at c1^2 = ab.
    with np.errstate(divide="ignore"):
        hi = np.where(t > 0.0, s / (4.0 * np.where(t > 0.0, t, 1.0) ** 2), a * b)
    lo = np.zeros_like(hi)
    for _ in range(100):
        mid = 0.5 * (lo + hi)
        keep = f_quartic(mid, qv) >= 0.0
        lo = np.where(keep, mid, lo)
        hi = np.where(keep, hi, mid)
    root = np.minimum(0.5 * (lo + hi), weaker)
    root = np.maximum(root, 0.0)
    return float(root[0]) if scalar else root


def physical_c1sq_max(a, b, t):
    """Largest c1^2 keeping the standard form (a, b, c1, -t c1) physical.

    Closed form from the smaller-symplectic-eigenvalue condition: the
    smaller root of 4 t^2 x^2 - Bx + C0 with B = 4ab(1+t^2) - 2t and
    C0 = 4(a^2 - 1/4)(b^2 - 1/4), capped by block positivity x <= ab
    and a^2 + b^2 - 2tx >= 1/2.
    """
    coeff_b = 4.0 * a * b * (1.0 + t * t) - 2.0 * t
    c0 = 4.0 * (a * a - 0.25) * (b * b - 0.25)
    cap = a * b
    if t > 0:
        cap = min(cap, (a * a + b * b - 0.5) / (2.0 * t))
    disc = coeff_b * coeff_b - 16.0 * t * t * c0
    if disc < 0:
        return max(cap, 0.0)
    root = 2.0 * c0 / (coeff_b + np.sqrt(disc))
    return max(min(root, cap), 0.0)


def random_local_symplectic(rng):
    """Euler-decomposed random Sp(2,R) x Sp(2,R) element.

    Each factor is R(theta) diag(e^s, e^-s) R(phi) with theta, phi
    uniform on [0, 2pi) and s uniform on [-1, 1]; determinant 1 by
    construction.
    """
    def factor():
        theta = rng.uniform(0.0, 2.0 * np.pi)
        phi = rng.uniform(0.0, 2.0 * np.pi)
        s = rng.uniform(-1.0, 1.0)
        rot1 = np.array([[np.cos(theta), -np.sin(theta)],
                         [np.sin(theta), np.cos(theta)]])
        rot2 = np.array([[np.cos(phi), -np.sin(phi)],
                         [np.sin(phi), np.cos(phi)]])
        return rot1 @ np.diag([np.exp(s), np.exp(-s)]) @ rot2

    return LocalSymplectic(factor(), factor())


_MAX_DRAWS = 100000


def random_standard_form(spec, rng, mode="separable", flip_sign=False):
    """Draw a physical standard form with c2 = -t c1 (entangling sign).

    Modes:
      separable       c1^2 uniform in [0, bound], or exactly at the bound
                      with probability spec.fraction_boundary;
      boundary        c1^2 = bound exactly;
      interior        c1^2 in [0.05, 0.9] * bound, t in [0.05, 0.9],
                      safely off every coincidence set;
      prep            P-representable without squeezing:
                      c1^2 uniform in [0, (a-1/2)(b-1/2)];
      entangled       c1^2 beyond the bound but within physicality, with
                      a guaranteed margin on both sides;
      weak_violating  c1^2 beyond the weaker constraint too, so the
                      structured probes detect the violation.

    flip_sign selects c2 = +t c1 instead.
    """
    for _ in range(_MAX_DRAWS):
        a = rng.uniform(*spec.a_range)
        b = rng.uniform(*spec.b_range)
        t = rng.uniform(*spec.t_range)
        if mode == "interior":
            t = min(max(t, 0.05), 0.9)
        bound = float(analytic_bound(RayQuery(a, b, t))[0])
        scale = 1.0 + a * b

        if mode == "boundary" or (mode == "separable"
                                  and rng.uniform() < spec.fraction_boundary):
            c1sq = bound
        elif mode == "separable":
            c1sq = rng.uniform() * bound
        elif mode == "interior":
            if bound < 1e-6 * scale:
                continue
            c1sq = rng.uniform(0.05, 0.9) * bound
        elif mode == "prep":
            c1sq = rng.uniform() * (a - 0.5) * (b - 0.5)
        elif mode in ("entangled", "weak_violating"):
            lo = bound
            if mode == "weak_violating":
                lo = max(lo, (2.0 * a - 1.0) * (2.0 * b - 1.0) / (1.0 + t) ** 2)
            phys = physical_c1sq_max(a, b, t)
            if phys - lo <= 1e-2 * scale:
                continue  # margin too thin for a clean entangled sample
            c1sq = lo + rng.uniform(0.05, 0.9) * (phys - lo)
        else:
            raise ValueError(f"unknown mode {mode!r}")

        c1 = float(np.sqrt(max(c1sq, 0.0)))
        c2 = t * c1 if flip_sign else -t * c1
        return StandardForm(a, b, c1, c2)
    raise RuntimeError(f"could not draw a {mode!r} sample from {spec}")


def _structured_optimal_probes(v):
    """Best probes of the form g = J'd, h = +-J'f, via a 4x4 eigenproblem.

    Substituting the structured choice reduces the condition to the
    quadratic form [[ (tr A - 1) I, N ], [ N', (tr B - 1) I ]] on (d, f)
    with N = C +- (tr(C) I - C'); its minimal eigenvector is the
    sharpest structured probe.
    """
    a_blk, b_blk, c_blk = v.block_a, v.block_b, v.block_c
    j = SYMPLECTIC_J
    probes = []
    for sign in (1.0, -1.0):
        n_blk = c_blk + sign * (np.trace(c_blk) * np.eye(2) - c_blk.T)
        quad = np.zeros((4, 4))
        quad[:2, :2] = (np.trace(a_blk) - 1.0) * np.eye(2)
        quad[2:, 2:] = (np.trace(b_blk) - 1.0) * np.eye(2)
        quad[:2, 2:] = n_blk
        quad[2:, :2] = n_blk.T
        w, vecs = np.linalg.eigh(0.5 * (quad + quad.T))
        d = vecs[:2, 0]
        f = vecs[2:, 0]
        probes.append(ProbeVectors(d, f, j.T @ d, sign * (j.T @ f)))
    return probes


def condition6_probe(v, n, rng):
    """Minimum condition-(6) margin over n random probe sets.

    Components are uniform on [-1, 1]; the structured choices
    g = J'd, h = +-J'f are always included, both with random (d, f) and
    with the per-sign optimal (d, f).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    a_blk, b_blk, c_blk = v.block_a, v.block_b, v.block_c
    j = SYMPLECTIC_J

    d = rng.uniform_array((n, 2), -1.0, 1.0)
    f = rng.uniform_array((n, 2), -1.0, 1.0)
    g = rng.uniform_array((n, 2), -1.0, 1.0)
    h = rng.uniform_array((n, 2), -1.0, 1.0)

    def margins(dv, fv, gv, hv):
        quad = (np.einsum("ni,ij,nj->n", dv, a_blk, dv)
                + np.einsum("ni,ij,nj->n", fv, b_blk, fv)
                + 2.0 * np.einsum("ni,ij,nj->n", dv, c_blk, fv)
                + np.einsum("ni,ij,nj->n", gv, a_blk, gv)
                + np.einsum("ni,ij,nj->n", hv, b_blk, hv)
                + 2.0 * np.einsum("ni,ij,nj->n", gv, c_blk, hv))
        cross = (np.abs(np.einsum("ni,ij,nj->n", dv, j, gv))
                 + np.abs(np.einsum("ni,ij,nj->n", fv, j, hv)))
        return quad - cross

    best = float(margins(d, f, g, h).min())
    for sign in (1.0, -1.0):
        best = min(best, float(margins(d, f, d @ j, sign * (f @ j)).min()))
    for p in _structured_optimal_probes(v):
        best = min(best, condition6_margin(v, p))
    return best
