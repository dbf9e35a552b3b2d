"""The EPR-variance root equation and where its root lands.

For a separable state the root function f(r1) starts non-negative at
r1 = 1 and is non-positive at the analytic squeezer, so bisection
always brackets a root.  On the separability boundary the root
coincides with the analytic squeezer; strictly inside it sits strictly
below.
"""

import numpy as np

from cvsep import (RayQuery, StandardForm, analytic_bound, analytic_squeeze,
                   duan_f, duan_root)

A, B, T = 1.0, 1.0, 0.5


def show(label, sf):
    r1a = float(analytic_squeeze(RayQuery(sf.a, sf.b, sf.t)).r1)
    root = duan_root(sf)
    print(f"--- {label}: c1 = {sf.c1:.7f}")
    print(f"    f(1)        = {duan_f(sf, 1.0):+.3e}")
    print(f"    f(analytic) = {duan_f(sf, r1a):+.3e}")
    print(f"    root r1*    = {root:.10f}   analytic r1 = {r1a:.10f}   "
          f"gap = {abs(root - r1a):.3e}")


def main():
    c1_max = float(np.sqrt(analytic_bound(RayQuery(A, B, T))[0]))
    show("on the boundary", StandardForm(A, B, c1_max, -T * c1_max))
    show("strictly inside", StandardForm(A, B, 0.7 * c1_max, -T * 0.7 * c1_max))
    show("barely correlated", StandardForm(A, B, 0.1 * c1_max, -T * 0.1 * c1_max))


if __name__ == "__main__":
    main()
