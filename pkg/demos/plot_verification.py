"""
Checking the inequality on a function class
===========================================

Sample the left-hand side on an (r, z) grid below the radius, for
Moebius maps, Blaschke products and random Schur functions.
"""

import numpy as np

from refined_bohr import RadiusProblem, functions as F, verify as V

prob = RadiusProblem(m=1, p=1.0)
rep = V.verify_inequality(prob, "mobius:a=0.9")
print(rep.function_id, "max lhs", rep.max_lhs, "at", rep.argmax, "passed", rep.passed)

# the Moebius maps approach equality at z = -r as a -> 1
for a in (0.5, 0.9, 0.99, 0.999):
    print(a, V.verify_inequality(prob, F.mobius(a)).max_lhs)

# a seeded corpus: 20 Moebius, 10 Blaschke, 200 Schur
funcs = F.corpus(seed=42)
worst = max(funcs, key=lambda f: V.verify_inequality(prob, f, r_steps=20, z_steps=180).max_lhs)
print("closest to the bound:", worst.label)

# beyond the radius the grid may still pass for non-extremal functions
print(V.verify_inequality(prob, F.schur([0.2, 0.1j]), r_max=0.6).note)

# coefficient moduli of a random Schur function
f = F.random_schur(np.random.default_rng(1))
print(f.label, np.round(np.abs(f.coeffs[:6]), 4))
