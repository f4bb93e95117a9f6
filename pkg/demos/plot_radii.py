"""
Sharp radii from the characteristic equation
============================================

Every radius in the library is the smallest root of one increasing
function F(x) = 1.  This walk-through solves a few of them and compares
against the explicit formulas.
"""

# the classical setting: m = 1, p = 2, no dilation, geometric weights
import math

import numpy as np

from refined_bohr import RadiusProblem, radius as R, weights as W

res = R.solve_radius(RadiusProblem(m=1, p=2.0))
print("classical radius", res.radius, "residual", res.residual)

# F is increasing, so a coarse scan plus bisection is enough
x = np.linspace(0, 0.5, 6)
print(np.c_[x, R.characteristic(RadiusProblem(p=2.0), x)])

# the exponent p moves the radius: p / (sqrt(4p+1) + p + 1)
for p in (0.5, 1.0, 1.5, 2.0):
    solved = R.solve_radius(RadiusProblem(p=p)).radius
    print(f"p={p:<4} solver={solved:.15f} closed={R.closed_form_radius('R_p', p=p):.15f}")

# only even-indexed coefficients counted
print("even weights", R.solve_radius(RadiusProblem(weights=W.even())).radius, math.sqrt(2) - 1)

# letting m grow: the limit flag drops x^m, large finite m gets close
for m in (10, 100, 400):
    print(m, R.solve_radius(RadiusProblem(m=m, p=1.0)).radius)
print("limit", R.solve_radius(RadiusProblem(p=1.0, limit_m=True)).radius, 1 / 3)

# a harmonic dilation bound k shrinks the radius; K-quasiregular means k = (K-1)/(K+1)
for K in (1, 2, 3, 1e6):
    k = R.k_from_K(K)
    print(f"K={K:g}", R.solve_radius(RadiusProblem(p=1.0, k=k, limit_m=True)).radius,
          (K + 1) / (5 * K + 1))
