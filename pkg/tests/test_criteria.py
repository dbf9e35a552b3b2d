"""Unit tests for the separability criteria."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cvsep import (BOUNDARY, ENTANGLED, SEPARABLE, UNPHYSICAL,
                   CovarianceMatrix, ProbeVectors, RayQuery, SplitMix64,
                   StandardForm, UnphysicalParams, analytic_bound, big_d,
                   condition6_margin, f_quartic, prep_check,
                   prep_eigensystem, analytic_squeeze, separability_verdict,
                   simon_margins, standard_form_physical, uncertainty_check)

phys = st.floats(0.5, 10.0)
ratio = st.floats(0.0, 1.0)


def test_simon_margins_reference_values():
    assert simon_margins(StandardForm(1, 1, 0.5, -0.25)) == \
        pytest.approx((0.8125, 0.25))
    det_m, weak_m = simon_margins(StandardForm(1, 1, 0.7, -0.35))
    assert det_m == pytest.approx(-0.4499, abs=1e-10)
    assert weak_m == pytest.approx(-0.05, abs=1e-12)


def test_simon_margins_vacuum():
    assert simon_margins(StandardForm(0.5, 0.5, 0, 0)) == (0.0, 0.0)


def test_simon_margins_rejects_subvacuum():
    with pytest.raises(UnphysicalParams):
        simon_margins(StandardForm(0.4, 1.0, 0.0, 0.0))


def test_ray_query_domain():
    with pytest.raises(UnphysicalParams):
        RayQuery(0.4, 1.0, 0.5)
    with pytest.raises(ValueError):
        RayQuery(1.0, 1.0, 1.5)


def test_verdict_classifications():
    assert separability_verdict(StandardForm(1, 1, 0.5, -0.25)).classification == SEPARABLE
    assert separability_verdict(StandardForm(1, 1, 0.7, -0.35)).classification == ENTANGLED
    assert separability_verdict(StandardForm(0.5, 0.5, 0, 0)).classification == BOUNDARY
    assert separability_verdict(StandardForm(0.4, 1, 0, 0)).classification == UNPHYSICAL


def test_verdict_boundary_at_the_bound():
    q = RayQuery(1.0, 1.0, 0.5)
    c1 = float(np.sqrt(analytic_bound(q)[0]))
    v = separability_verdict(StandardForm(1.0, 1.0, c1, -0.5 * c1))
    assert v.classification == BOUNDARY
    assert abs(v.det_margin) <= 1e-9 * 2.0


def test_standard_form_physical_matches_matrix_route():
    rng = SplitMix64(5)
    for _ in range(500):
        a = rng.uniform(0.45, 2.0)
        b = rng.uniform(0.45, 2.0)
        c1 = rng.uniform(0.0, 1.5)
        c2 = rng.uniform(-1.5, 1.5)
        sf = StandardForm(a, b, c1, c2)
        v = CovarianceMatrix.from_standard_form(sf)
        assert standard_form_physical(sf) == uncertainty_check(v, ppt=False)


def test_big_d_reference():
    assert big_d(RayQuery(1, 1, 0.5)) == pytest.approx(1.6875)


def test_analytic_bound_reference():
    c1sq, c2sq = analytic_bound(RayQuery(1, 1, 0.5))
    assert c1sq == pytest.approx(0.4019238, abs=1e-7)
    assert c2sq == pytest.approx(0.1004810, abs=1e-7)


def test_analytic_bound_limits():
    c1sq, c2sq = analytic_bound(RayQuery(2.0, 3.0, 0.0))
    assert c1sq == pytest.approx((2.0 - 1 / 8.0) * (3.0 - 1 / 12.0), rel=1e-14)
    assert c2sq == 0.0


@settings(max_examples=200, deadline=None)
@given(phys, phys, st.floats(1e-6, 1.0))
def test_analytic_bound_is_quartic_root(a, b, t):
    q = RayQuery(a, b, t)
    c1sq = analytic_bound(q)[0]
    assert abs(f_quartic(c1sq, q)) <= 1e-9 * (1.0 + (a * b) ** 2)
    # smaller root: f stays positive strictly inside (up to rounding)
    assert f_quartic(0.5 * c1sq, q) >= -1e-12 * (1.0 + (a * b) ** 2)


@settings(max_examples=200, deadline=None)
@given(phys, phys, ratio)
def test_bound_monotone_decreasing_in_t(a, b, t):
    hi = analytic_bound(RayQuery(a, b, t))[0]
    lo = analytic_bound(RayQuery(a, b, min(t + 0.05, 1.0)))[0]
    assert lo <= hi + 1e-12


def test_prep_check_vacuum_and_thermal():
    assert prep_check(CovarianceMatrix(0.5 * np.eye(4)))
    assert prep_check(CovarianceMatrix(np.eye(4)))
    assert not prep_check(CovarianceMatrix(0.4 * np.eye(4)), tol=1e-9)


def test_prep_eigensystem_closed_form_matches_matrix():
    sf = StandardForm(1.2, 0.9, 0.3, -0.1)
    r = analytic_squeeze(RayQuery(sf.a, sf.b, sf.t))
    prep = prep_eigensystem(sf, r)
    v0 = CovarianceMatrix.from_standard_form(sf).matrix
    gram = np.diag([1 / float(r.r1), float(r.r1), 1 / float(r.r2), float(r.r2)])
    w = np.linalg.eigvalsh(v0 - 0.5 * gram)
    got = sorted([prep.lambda1_plus, prep.lambda1_minus,
                  prep.lambda2_plus, prep.lambda2_minus])
    assert np.allclose(got, w, atol=1e-12)


def test_prep_eigensystem_boundary_state():
    c1 = float(np.sqrt(analytic_bound(RayQuery(1, 1, 0.5))[0]))
    assert c1 == pytest.approx(0.6339746, abs=1e-7)
    prep = prep_eigensystem(StandardForm(1, 1, c1, -0.5 * c1),
                            analytic_squeeze(RayQuery(1, 1, 0.5)))
    assert abs(prep.lambda1_minus) <= 1e-12
    assert abs(prep.lambda2_minus) <= 1e-12
    assert prep.feasible


def test_condition6_margin_reference():
    v = CovarianceMatrix.from_standard_form(StandardForm(1, 1, 0.5, -0.25))
    p = ProbeVectors(np.array([1.0, 0.0]), np.array([0.0, 1.0]),
                     np.array([0.0, 1.0]), np.array([1.0, 0.0]))
    # d'Ad + f'Bf + g'Ag + h'Bh = 4, cross terms 0, |d'Jg| = |f'Jh| = 1
    assert condition6_margin(v, p) == pytest.approx(2.0)


def test_probe_vectors_validate_shape():
    with pytest.raises(ValueError):
        ProbeVectors(np.zeros(3), np.zeros(2), np.zeros(2), np.zeros(2))
