import math

import numpy as np
import pytest

from refined_bohr import core
from refined_bohr import verify as V
from refined_bohr import weights as W
from refined_bohr.core import RadiusProblem
from refined_bohr.errors import DomainError, SpecError
from refined_bohr.functions import coefficients, extremal_pair, mobius, schur

P2 = RadiusProblem(p=2.0)
K1 = RadiusProblem(p=1.0, k=1.0)


def brute_lhs(prob, f, r, z):
    """Direct coefficient loop: |f(z^m)|^p + sum_{n >= N} |a_n| phi_n(r)."""
    zm = z ** prob.m
    val = abs(sum(c * zm ** n for n, c in enumerate(f.coeffs))) ** prob.p
    for n in range(prob.N, f.order):
        val += abs(f.coeffs[n]) * W.term(prob.weights, n, r)
    return val


def test_mobius_p2_passes():
    rep = V.verify_inequality(P2, "mobius:a=0.9")
    assert rep.passed
    assert abs(rep.radius - 1 / 3) < 1e-10
    assert rep.max_lhs <= 1 + V.LHS_TOL
    assert rep.margin == pytest.approx(1 - rep.max_lhs)
    assert rep.truncation_worst < 1e-11
    assert rep.function_id.startswith("mobius")
    # the envelope dominates every sampled point for the Moebius family
    assert rep.envelope_max_lhs >= rep.max_lhs - 1e-12
    assert rep.note == ""


def test_extremal_k1_passes():
    rep = V.verify_inequality(K1, extremal_pair(0.99, 1.0))
    assert rep.passed
    assert rep.radius == pytest.approx((2 * math.sqrt(3) - 3) / 3, abs=1e-12)


def test_zero_function():
    rep = V.verify_inequality(P2, coefficients([0.0] * 8, label="zero"))
    assert rep.max_lhs == 0 and rep.passed


def test_report_matches_brute_force():
    prob = RadiusProblem(m=2, p=1.5, N=2)
    f = schur([0.3 + 0.2j, -0.5, 0.1j], T=64)
    rep = V.verify_inequality(prob, f, r_steps=10, z_steps=64, T=64)
    r = rep.argmax["r"]
    z = complex(*rep.argmax["z"])
    assert abs(abs(z) - r) < 1e-14
    assert rep.max_lhs == pytest.approx(brute_lhs(prob, f, r, z), abs=1e-12)
    assert len(rep.r_grid) == 11 and rep.r_grid[-1] == pytest.approx(rep.radius)


def test_extremal_point_is_sampled():
    # z^m = -r^m is added to the grid, so the Moebius maximum is hit exactly
    prob = RadiusProblem(m=3, p=1.0)
    rep = V.verify_inequality(prob, mobius(0.999), r_steps=4, z_steps=8)
    assert rep.max_lhs == pytest.approx(rep.envelope_max_lhs, abs=1e-12)


def test_beyond_radius_note():
    rep = V.verify_inequality(P2, schur([0.1]), r_max=0.6)
    assert rep.note and rep.r_grid[-1] == pytest.approx(0.6)


def test_failure_is_reported(caplog):
    rep = V.verify_inequality(P2, mobius(0.999), r_max=0.5)
    assert not rep.passed and rep.max_lhs > 1
    assert "fails" in caplog.text


def test_verify_preconditions():
    with pytest.raises(ValueError):
        V.verify_inequality(P2, mobius(0.5), r_steps=1)
    with pytest.raises(ValueError):
        V.verify_inequality(P2, mobius(0.5), z_steps=4)
    with pytest.raises(SpecError):
        V.verify_inequality(P2, "mobius:b=1")
    with pytest.raises(ValueError):
        V.verify_inequality(RadiusProblem(N=2), extremal_pair(0.5, 0.5))


def test_small_corpus_passes(small_corpus):
    for prob in (RadiusProblem(p=0.5), RadiusProblem(m=2, p=2.0, k=0.5, weights=W.even())):
        for f in small_corpus:
            rep = V.verify_inequality(prob, f, r_steps=20, z_steps=90)
            assert rep.passed, (prob, f.label, rep.argmax)


@pytest.mark.parametrize("prob, r_probe", [(RadiusProblem(p=1.0), None), (P2, 0.34),
                                           (K1, None), (RadiusProblem(N=2, m=2), None)])
def test_sharpness_probe(prob, r_probe):
    radius = V.solve_radius(prob).radius
    rp = radius + 0.01 if r_probe is None else r_probe
    rep = V.sharpness_probe(prob, rp)
    assert rep.exceeds and rep.lhs_at_witness > 1
    assert rep.q_limit_value > 0
    assert rep.radius == radius
    if r_probe is not None:
        assert rep.a_witness >= 0.99


def test_sharpness_probe_witness_is_extremal():
    rep = V.sharpness_probe(P2, 0.35)
    assert rep.lhs_at_witness == pytest.approx(V.extremal_lhs(P2, rep.a_witness, 0.35), rel=1e-15)
    best = max(V.extremal_lhs(P2, 1 - 1e-4 * j, 0.35) for j in range(1, 101))
    assert rep.lhs_at_witness == best


def test_sharpness_probe_preconditions():
    with pytest.raises(DomainError):
        V.sharpness_probe(P2, 0.3)
    with pytest.raises(DomainError):
        V.sharpness_probe(P2, 0.4, a_grid_step=0.1)
    with pytest.raises(DomainError):
        V.sharpness_probe(P2, 1.0)


def test_monotonicity_examples():
    prob = RadiusProblem(p=1.0)
    assert V.monotonicity_check(prob)
    _, d1, _ = core.psi(1.0, prob, V.solve_radius(prob).radius)
    assert abs(d1) < 1e-9
    assert V.convexity_check(RadiusProblem(p=0.5))
    assert V.monotonicity_check(RadiusProblem(p=0.5))
    assert V.monotonicity_check(P2, r=V.solve_radius(P2).radius / 2)
    with pytest.raises(DomainError):
        V.monotonicity_check(P2, r=0.5)
    with pytest.raises(ValueError):
        V.monotonicity_check(P2, a_steps=50)


def test_monotonicity_detects_failure():
    # just above the radius Psi'(1) turns positive
    prob = RadiusProblem(p=1.0)
    _, d1, _ = core.psi(1.0, prob, V.solve_radius(prob).radius + 0.05)
    assert d1 > 0


def test_psi_report():
    rep = V.psi_report(RadiusProblem(p=0.5))
    assert rep["monotone"] and rep["convex"]
    assert abs(rep["psi_at_1"]) < 1e-12
    assert V.psi_report(P2)["convex"] is None


@pytest.mark.parametrize("w", [W.geometric(), W.even(), W.lacunary(3)])
def test_lemma_c(w):
    lhs, rhs = V.lemma_c_check("mobius:a=0.3", 0.5, 1j, w, 0.4)
    assert lhs / rhs == pytest.approx(1, abs=1e-12)
    lhs, rhs = V.lemma_c_check("mobius:a=0.3", 0.5, np.exp(0.7j), w, 0.4, scale=0.9)
    assert lhs == pytest.approx(0.81 * rhs, rel=1e-12) and lhs < rhs
    assert V.lemma_c_check("mobius:a=0.3", 0.0, 1, w, 0.4) == (0.0, 0.0)


def test_radius_table():
    rows = V.radius_table()
    assert all(tuple(r) == V.TABLE_COLUMNS for r in rows)
    assert all(r["abs_diff"] < 1e-9 for r in rows)
    by = {(r["name"], r["params"]): r for r in rows}
    assert by[("R_p", "p=2")]["closed_form"] == pytest.approx(1 / 3, abs=1e-15)
    assert by[("K_form_a", "K=1")]["closed_form"] == pytest.approx(1 / 3, abs=1e-15)
    assert by[("sqrt2_minus_1", "")]["closed_form"] == pytest.approx(0.41421356, abs=1e-8)
    names = {r["name"] for r in rows}
    assert names == {"R_p", "R_k_p", "K_form_a", "K_form_b", "p_over_2_plus_p",
                     "sqrt2_minus_1", "lacunary", "rho_poly"}
    assert len(rows) == 4 + 6 + 8 + 2 + 1 + 4 + 6


def test_regression_set_shape():
    probs = V.regression_problems()
    assert len(set(probs)) == len(probs)
    assert any(p.limit_m for p in probs) and any(p.N > 1 for p in probs)
    assert any(p.k > 0 for p in probs) and any(not p.weights.is_geometric for p in probs)
