"""Classify a few two-mode Gaussian states from their covariance matrices.

Walks through the basic pipeline: build a covariance matrix, reduce it
to standard form, read off the verdict and its margins, and — for the
separable ones — recover the squeezing parameters that certify
separability through the P-representation.
"""

import numpy as np

from cvsep import (CovarianceMatrix, RayQuery, StandardForm,
                   analytic_squeeze, prep_eigensystem, separability_verdict,
                   to_standard_form)

STATES = {
    "vacuum": 0.5 * np.eye(4),
    "thermal": 1.3 * np.eye(4),
    "correlated, separable": CovarianceMatrix.from_standard_form(
        StandardForm(1.0, 1.0, 0.5, -0.25)).matrix,
    "correlated, entangled": CovarianceMatrix.from_standard_form(
        StandardForm(1.0, 1.0, 0.7, -0.35)).matrix,
    "sub-vacuum (unphysical)": 0.4 * np.eye(4),
}


def main():
    for name, m in STATES.items():
        v = CovarianceMatrix(m)
        sf = to_standard_form(v)
        verdict = separability_verdict(sf)
        print(f"--- {name}")
        print(f"    standard form: a={sf.a:.6f} b={sf.b:.6f} "
              f"c1={sf.c1:.6f} c2={sf.c2:.6f}")
        print(f"    verdict: {verdict.classification}  "
              f"(det margin {verdict.det_margin:+.6f}, "
              f"weak margin {verdict.weak_margin:+.6f})")
        if verdict.classification == "unphysical":
            continue
        r = analytic_squeeze(RayQuery(sf.a, sf.b, sf.t))
        prep = prep_eigensystem(sf, r)
        print(f"    squeezers: r1={float(r.r1):.7f} r2={float(r.r2):.7f}  "
              f"P-representable after squeezing: {prep.feasible}")


if __name__ == "__main__":
    main()
