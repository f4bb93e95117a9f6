"""
Harmonic pairs and coefficient domination
=========================================

For f = h + conj(g) with g = lambda k h (up to a constant), the weighted
coefficient energy of g is exactly k^2 times that of h.
"""

import numpy as np

from refined_bohr import RadiusProblem, functions as F, verify as V, weights as W

h = F.mobius(0.3)
for w in (W.geometric(), W.even(), W.lacunary(3)):
    lhs, rhs = V.lemma_c_check(h, 0.5, 1j, w, 0.4)
    print(f"{w.spec():<12} lhs={lhs:.12f} rhs={rhs:.12f}")

# shrinking g by 0.9 shrinks its energy by 0.81
lhs, rhs = V.lemma_c_check(h, 0.5, np.exp(0.7j), W.geometric(), 0.4, scale=0.9)
print("scaled ratio", lhs / rhs)

# the harmonic radius with k = 1 solves 3x^2 + 6x - 1 = 0
prob = RadiusProblem(p=1.0, k=1.0)
rep = V.verify_inequality(prob, F.extremal_pair(0.99, 1.0))
print("radius", rep.radius, (2 * np.sqrt(3) - 3) / 3, "passed", rep.passed)
