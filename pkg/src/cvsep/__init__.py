"""Separability analysis for two-mode Gaussian states.

Given a 4x4 covariance matrix (or its local-symplectic standard form
(a, b, c1, c2)), this package decides separability, computes the
closed-form squeezing parameters that make the P-representation
condition saturate the invariant separability bound along each ray
t = |c2|/|c1|, and cross-checks everything against brute-force
numeric oracles.
"""

from .covariance import (CovarianceMatrix, InconsistentInvariants,
                         LocalSymplectic, NonPhysicalBlocks, SqueezeParams,
                         StandardForm, SYMPLECTIC_J, apply_local_symplectic,
                         squeeze_gram, to_standard_form, uncertainty_check)
from .criteria import (BOUNDARY, ENTANGLED, SEPARABLE, UNPHYSICAL,
                       PrepEigenvalues, ProbeVectors, RayQuery,
                       UnphysicalParams, Verdict, analytic_bound, big_d,
                       condition6_margin, f_quartic, prep_check,
                       prep_eigensystem, separability_verdict, simon_margins,
                       standard_form_physical)
from .duan import EntangledInput, NoRootBracket, duan_f, duan_margin, duan_root
from .linalg import hermitian_psd, is_psd, jacobi_eigenvalues, sym_eigenvalues
from .oracle import (RandomSpec, SplitMix64, condition6_probe,
                     numeric_c1_bound, physical_c1sq_max,
                     random_local_symplectic, random_standard_form)
from .squeezing import (DomainError, analytic_squeeze, boundary_identity,
                        r2_of_r1, sqrt_identity, stationarity_residuals)

__version__ = "0.1.0"

__all__ = [
    "CovarianceMatrix", "InconsistentInvariants", "LocalSymplectic",
    "NonPhysicalBlocks", "SqueezeParams", "StandardForm", "SYMPLECTIC_J",
    "apply_local_symplectic", "squeeze_gram", "to_standard_form",
    "uncertainty_check",
    "BOUNDARY", "ENTANGLED", "SEPARABLE", "UNPHYSICAL",
    "PrepEigenvalues", "ProbeVectors", "RayQuery", "UnphysicalParams",
    "Verdict", "analytic_bound", "big_d", "condition6_margin", "f_quartic",
    "prep_check", "prep_eigensystem", "separability_verdict",
    "simon_margins", "standard_form_physical",
    "EntangledInput", "NoRootBracket", "duan_f", "duan_margin", "duan_root",
    "hermitian_psd", "is_psd", "jacobi_eigenvalues", "sym_eigenvalues",
    "RandomSpec", "SplitMix64", "condition6_probe", "numeric_c1_bound",
    "physical_c1sq_max", "random_local_symplectic", "random_standard_form",
    "DomainError", "analytic_squeeze", "boundary_identity", "r2_of_r1",
    "sqrt_identity", "stationarity_residuals",
    "__version__",
]
