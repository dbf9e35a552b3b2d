"""Unit tests for the covariance-matrix domain model."""

import numpy as np
import pytest

from cvsep import (CovarianceMatrix, LocalSymplectic, NonPhysicalBlocks,
                   SplitMix64, SqueezeParams, StandardForm, SYMPLECTIC_J,
                   apply_local_symplectic, random_local_symplectic,
                   squeeze_gram, to_standard_form, uncertainty_check)


def test_standard_form_canonicalizes_order_and_sign():
    sf = StandardForm(1.0, 2.0, -0.1, 0.3)
    assert sf.c1 == 0.3
    assert sf.c2 == -0.1
    assert np.isclose(sf.t, 1.0 / 3.0)


def test_standard_form_t_zero_when_uncorrelated():
    assert StandardForm(1.0, 1.0, 0.0, 0.0).t == 0.0


def test_standard_form_rejects_nonpositive_a():
    with pytest.raises(ValueError):
        StandardForm(0.0, 1.0, 0.0, 0.0)


def test_covariance_matrix_is_frozen_and_symmetric():
    v = CovarianceMatrix(np.diag([1.0, 1.0, 2.0, 2.0]))
    assert not v.matrix.flags.writeable
    m = np.eye(4)
    m[0, 2] = 0.5
    v = CovarianceMatrix(m)
    assert v.matrix[2, 0] == pytest.approx(0.25)  # symmetrized average


def test_covariance_matrix_rejects_nonpositive_diagonal():
    with pytest.raises(ValueError):
        CovarianceMatrix(np.diag([1.0, -1.0, 1.0, 1.0]))


def test_from_standard_form_blocks():
    sf = StandardForm(1.0, 2.0, 0.5, -0.25)
    v = CovarianceMatrix.from_standard_form(sf)
    assert np.allclose(v.block_a, np.eye(2))
    assert np.allclose(v.block_b, 2.0 * np.eye(2))
    assert np.allclose(v.block_c, np.diag([0.5, -0.25]))


def test_local_symplectic_requires_unit_determinant():
    with pytest.raises(ValueError):
        LocalSymplectic(2.0 * np.eye(2), np.eye(2))


def test_squeeze_params_require_at_least_one():
    with pytest.raises(ValueError):
        SqueezeParams(0.5, 1.0)
    assert squeeze_gram(SqueezeParams(2.0, 4.0)).tolist() == \
        np.diag([0.5, 2.0, 0.25, 4.0]).tolist()


def test_vacuum_is_physical_and_ppt_positive():
    v = CovarianceMatrix(0.5 * np.eye(4))
    assert uncertainty_check(v, ppt=False)
    assert uncertainty_check(v, ppt=True)


def test_uncertainty_check_flags_subvacuum():
    v = CovarianceMatrix(0.25 * np.eye(4))
    assert not uncertainty_check(v, ppt=False)


def test_ppt_check_detects_entanglement():
    v = CovarianceMatrix.from_standard_form(StandardForm(1.0, 1.0, 0.7, -0.35))
    assert uncertainty_check(v, ppt=False)
    assert not uncertainty_check(v, ppt=True)


def test_to_standard_form_identity_on_standard_input():
    sf = StandardForm(1.3, 0.9, 0.4, -0.2)
    back = to_standard_form(CovarianceMatrix.from_standard_form(sf))
    assert np.allclose([back.a, back.b, back.c1, back.c2],
                       [sf.a, sf.b, sf.c1, sf.c2], atol=1e-12)


def test_to_standard_form_invariant_under_conjugation():
    rng = SplitMix64(11)
    sf = StandardForm(1.5, 1.1, 0.6, -0.3)
    v = CovarianceMatrix.from_standard_form(sf)
    for _ in range(1000):
        s = random_local_symplectic(rng)
        back = to_standard_form(apply_local_symplectic(v, s))
        assert np.allclose([back.a, back.b, back.c1, back.c2],
                           [sf.a, sf.b, sf.c1, sf.c2], atol=1e-9)


def test_to_standard_form_positive_product_sign():
    sf = StandardForm(1.0, 1.0, 0.3, 0.2)
    back = to_standard_form(CovarianceMatrix.from_standard_form(sf))
    assert back.c2 == pytest.approx(0.2, abs=1e-12)


def test_to_standard_form_rejects_degenerate_block():
    m = 0.5 * np.eye(4)
    m[0, 0] = m[1, 1] = 0.0
    with pytest.raises((NonPhysicalBlocks, ValueError)):
        to_standard_form(CovarianceMatrix(m + 1e-300 * np.eye(4)))


def test_apply_local_symplectic_preserves_symplectic_form():
    rng = SplitMix64(3)
    for _ in range(100):
        s = random_local_symplectic(rng)
        for blk in (s.s1, s.s2):
            assert np.allclose(blk @ SYMPLECTIC_J @ blk.T, SYMPLECTIC_J,
                               atol=1e-12)
