"""
Why the radius cannot be enlarged
=================================

Past the radius the Moebius family (a - z)/(1 - az) with a close to 1
pushes the left-hand side above 1, and the a -> 1 limit of the proof
function turns positive.
"""

import numpy as np

from refined_bohr import RadiusProblem, core, verify as V

prob = RadiusProblem(m=1, p=2.0)
rad = V.solve_radius(prob).radius

# a sweep over a at a probe radius just past 1/3
rep = V.sharpness_probe(prob, 0.34)
print("witness a", rep.a_witness, "lhs", rep.lhs_at_witness, "exceeds", rep.exceeds)

# the lhs at z = -r as a function of r, for one a
a = 0.9999
for r in np.linspace(rad - 0.02, rad + 0.02, 5):
    print(f"r={r:.4f} lhs={V.extremal_lhs(prob, a, r):.8f}")

# q_limit changes sign exactly at the radius
for r in (rad - 1e-3, rad, rad + 1e-3):
    print(f"q_limit({r:.6f}) = {core.q_limit(prob, r):+.3e}")

# Psi decreases to 0 at a = 1 when r is the radius
a = np.linspace(0, 1, 6)
print(np.round(core.psi(a, prob, rad)[0], 6))
