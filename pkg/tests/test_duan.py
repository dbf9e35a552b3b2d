"""Unit tests for the squeezed-criterion root equation."""

import numpy as np
import pytest

from cvsep import (EntangledInput, RandomSpec, RayQuery, SplitMix64,
                   SqueezeParams, StandardForm, analytic_bound,
                   analytic_squeeze, duan_f, duan_margin, duan_root,
                   random_standard_form)


def _boundary_form(a=1.0, b=1.0, t=0.5):
    c1 = float(np.sqrt(analytic_bound(RayQuery(a, b, t))[0]))
    return StandardForm(a, b, c1, -t * c1)


def test_duan_margin_sign_tracks_weak_condition():
    sep = StandardForm(1, 1, 0.5, -0.25)
    ent = StandardForm(1, 1, 0.7, -0.35)
    unit = SqueezeParams(1.0, 1.0)
    assert duan_margin(sep, unit) > 0
    assert duan_margin(ent, unit) == pytest.approx(-0.05, abs=1e-12)


def test_duan_margin_vanishes_at_analytic_squeezers_on_boundary():
    sf = _boundary_form()
    r = analytic_squeeze(RayQuery(sf.a, sf.b, sf.t))
    assert duan_margin(sf, SqueezeParams(float(r.r1), float(r.r2))) == \
        pytest.approx(0.0, abs=1e-8)


def test_duan_f_reference_values():
    sf = _boundary_form()
    assert duan_f(sf, 1.0) == pytest.approx(0.3169873, abs=1e-7)
    assert duan_f(sf, 1.0) == pytest.approx((1.0 - sf.t) * sf.c1, abs=1e-12)
    r1 = float(analytic_squeeze(RayQuery(1, 1, 0.5)).r1)
    assert duan_f(sf, r1) == pytest.approx(0.0, abs=1e-8)
    # hand check at the root: sqrt(r1 r2)|c1| equals a r1 - 1/2 there
    assert r1 * sf.c1 == pytest.approx(sf.a * r1 - 0.5, abs=1e-12)


def test_duan_root_boundary_coincides_with_analytic():
    sf = _boundary_form()
    r1 = float(analytic_squeeze(RayQuery(1, 1, 0.5)).r1)
    assert duan_root(sf) == pytest.approx(r1, abs=1e-6)


def test_duan_root_interior_lies_strictly_inside():
    sf = StandardForm(1, 1, 0.5, -0.25)
    root = duan_root(sf)
    r1 = float(analytic_squeeze(RayQuery(1, 1, 0.5)).r1)
    assert 1.0 <= root <= 2.0 * sf.a
    assert abs(duan_f(sf, root)) <= 1e-10
    assert r1 - root > 1e-6


def test_duan_root_short_circuits():
    assert duan_root(StandardForm(1.5, 1.2, 0.0, 0.0)) == 1.0
    assert duan_root(StandardForm(1.5, 1.2, 0.3, -0.3)) == 1.0  # t = 1


def test_duan_root_rejects_entangled():
    with pytest.raises(EntangledInput):
        duan_root(StandardForm(1, 1, 0.7, -0.35))


def test_duan_chain_random_separable():
    rng = SplitMix64(17)
    spec = RandomSpec(seed=17)
    for _ in range(500):
        sf = random_standard_form(spec, rng, "separable")
        assert duan_f(sf, 1.0) >= -1e-12
        r1 = float(analytic_squeeze(RayQuery(sf.a, sf.b, sf.t)).r1)
        assert duan_f(sf, r1) <= 1e-12
        root = duan_root(sf)
        assert 1.0 - 1e-12 <= root <= 2.0 * sf.a + 1e-12
        assert abs(duan_f(sf, root)) <= 1e-10 or root in (1.0,)
