"""Sharp radii and numerical checks for refined Bohr inequalities.

Covers bounded analytic self-maps of the unit disk and sense-preserving
harmonic mappings ``h + conj(g)`` with ``|g'| <= k |h'|``, for masked
geometric weight sequences.
"""

from .core import (RadiusProblem, bohr_sum, bohr_sum0, envelope, lhs_theorem1, lhs_theorem2,
                   norm_sq_r, pair_sums, psi, q_function, q_limit, refined_A, refined_A_closed,
                   theorem_b_gap)
from .errors import DomainError, NoRootError, SpecError
from .functions import (HarmonicPair, SeriesFunction, blaschke, corpus, extremal_pair, mobius,
                        parse_function, proportional_pair, schur, schwarz_pick_check)
from .radius import (RadiusResult, characteristic, closed_form_radius, k_from_K,
                     polynomial_radius, solve_radius)
from .verify import (SharpnessReport, VerificationReport, convexity_check, lemma_c_check,
                     monotonicity_check, radius_table, regression_problems, sharpness_probe,
                     verify_inequality)
from .weights import WeightSequence, make_weights, parse_weights, tail, term

__version__ = "0.1.0"
