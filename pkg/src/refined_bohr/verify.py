"""Grid verification of the inequalities, sharpness probes and regression tables.

The left-hand sides are checked on ``r = R j / r_steps`` and on
``z = r exp(2 pi i l / z_steps)`` together with the extra point
``z = r exp(i pi / m)`` where ``z**m = -r**m`` (the extremal point of the
Moebius family).  Passing below the radius is a necessary consequence of the
inequality, not a proof; failing beyond the radius is only expected for the
extremal family, and other functions may well pass there.
"""

from __future__ import annotations

import logging
import math
from dataclasses import asdict, dataclass, field
from typing import Optional, Union

import numpy as np

from . import core
from . import weights as W
from .core import RadiusProblem
from .errors import DomainError
from .functions import (DEFAULT_ORDER, HarmonicPair, SeriesFunction, extremal_pair, mobius,
                        parse_function, proportional_pair)
from .radius import closed_form_radius, k_from_K, matching_problem, solve_radius

log = logging.getLogger(__name__)

LHS_TOL = 1e-10
PSI_TOL = 1e-12

FunctionLike = Union[str, SeriesFunction, HarmonicPair]


@dataclass
class VerificationReport:
    problem: dict
    radius: float
    function_id: str
    r_grid: list
    max_lhs: float
    argmax: dict
    margin: float
    truncation_worst: float
    passed: bool
    envelope_max_lhs: Optional[float] = None
    note: str = ""

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class SharpnessReport:
    r_probe: float
    a_witness: float
    lhs_at_witness: float
    q_limit_value: float
    exceeds: bool
    radius: float = math.nan
    problem: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


def _as_function(f: FunctionLike, T: int):
    return parse_function(f, T) if isinstance(f, str) else f


def _lhs_parts(prob: RadiusProblem, f: FunctionLike):
    """Return ``(h, extra)`` where ``extra(r)`` gives the z-independent sums."""
    w = prob.weights
    if prob.N == 1:
        pair = f if isinstance(f, HarmonicPair) else proportional_pair(f, prob.k)
        return pair.h, lambda r: core.pair_sums(pair, w, r)
    if isinstance(f, HarmonicPair):
        if f.k != 0:
            raise ValueError("tail start N > 1 takes an analytic function (k = 0)")
        f = f.h

    def extra(r):
        b, e = core.bohr_sum(f, w, prob.N, r, full_output=True)
        return np.asarray(b), np.asarray(e)

    return f, extra


def verify_inequality(prob: RadiusProblem, f: FunctionLike, r_steps: int = 50,
                      z_steps: int = 720, tol: float = LHS_TOL, r_max: Optional[float] = None,
                      T: int = DEFAULT_ORDER) -> VerificationReport:
    """Maximize the left-hand side over the ``(r, z)`` grid for ``r <= radius``.

    ``r_max`` extends the grid past the radius; the report then carries a
    note, since a pass there does not contradict sharpness.
    """
    if r_steps < 2 or z_steps < 8:
        raise ValueError("need r_steps >= 2 and z_steps >= 8")
    f = _as_function(f, T)
    radius = solve_radius(prob).radius
    top = radius if r_max is None else r_max
    r_grid = top * np.arange(r_steps + 1) / r_steps
    h, extra = _lhs_parts(prob, f)
    sums, sum_err = extra(r_grid)

    m = 1 if prob.limit_m else prob.m
    angles = np.append(2 * np.pi * np.arange(z_steps) / z_steps, np.pi / m)
    unit = np.exp(1j * angles)
    z = r_grid[:, None] * unit[None, :]
    mod, mod_err = core.modulus_term(h, prob, z)
    lhs = mod + sums[:, None]
    i, j = np.unravel_index(int(np.argmax(lhs)), lhs.shape)
    max_lhs = float(lhs[i, j])
    trunc = float(np.max(sum_err) + mod_err)

    env = core.envelope(prob, h.abs_a0, r_grid) + sums
    report = VerificationReport(
        problem=prob.to_dict(), radius=radius, function_id=f.label,
        r_grid=r_grid.tolist(), max_lhs=max_lhs,
        argmax={"r": float(r_grid[i]), "z": [float(z[i, j].real), float(z[i, j].imag)]},
        margin=1 - max_lhs, truncation_worst=trunc, passed=max_lhs <= 1 + tol,
        envelope_max_lhs=float(np.max(env)),
    )
    if trunc >= tol / 10:
        log.warning("truncation remainder %.3g exceeds tol/10 for %s", trunc, report.function_id)
    if top > radius:
        report.note = ("grid extends beyond the radius; sharpness is a statement about the "
                       "class, so a pass there is not a contradiction")
    if not report.passed:
        log.warning("inequality fails for %s at r=%s z=%s: lhs=%.17g", report.function_id,
                    report.argmax["r"], report.argmax["z"], max_lhs)
    return report


def extremal_lhs(prob: RadiusProblem, a: float, r: float, T: int = DEFAULT_ORDER) -> float:
    """Left-hand side for the Moebius family at ``z = r exp(i pi/m)``, i.e. ``z^m = -r^m``."""
    m = 1 if prob.limit_m else prob.m
    z = r * np.exp(1j * np.pi / m)
    if prob.N == 1:
        return core.lhs_theorem1(extremal_pair(a, prob.k, T=T), prob, z, r)
    return core.lhs_theorem2(mobius(a, T), prob, z, r)


def sharpness_probe(prob: RadiusProblem, r_probe: float, a_grid_step: float = 1e-4,
                    a_count: int = 100, T: int = DEFAULT_ORDER) -> SharpnessReport:
    """Search ``a = 1 - a_grid_step * j`` (``j = 1..a_count``) for an extremal witness."""
    radius = solve_radius(prob).radius
    if not radius < r_probe < 1:
        raise DomainError(f"r_probe must lie in (radius={radius}, 1)")
    if not 0 < a_grid_step <= 1e-2:
        raise DomainError("a_grid_step must lie in (0, 1e-2]")
    best_a, best = math.nan, -math.inf
    for j in range(1, a_count + 1):
        a = 1 - a_grid_step * j
        if a <= 0:
            break
        val = extremal_lhs(prob, a, r_probe, T)
        if val > best:
            best_a, best = a, val
    return SharpnessReport(r_probe=float(r_probe), a_witness=best_a, lhs_at_witness=best,
                           q_limit_value=core.q_limit(prob, r_probe), exceeds=best > 1,
                           radius=radius, problem=prob.to_dict())


def _psi_grid(prob: RadiusProblem, r: float, a_steps: int):
    radius = solve_radius(prob).radius
    if r > radius + 1e-12:
        raise DomainError(f"r={r} lies above the radius {radius}")
    if a_steps < 100:
        raise ValueError("need a_steps >= 100")
    a = np.linspace(0.0, 1.0, a_steps + 1)
    return a, core.psi(a, prob, r)


def monotonicity_check(prob: RadiusProblem, r: Optional[float] = None, a_steps: int = 1000,
                       tol: float = PSI_TOL) -> bool:
    """``Psi`` is non-increasing on ``[0, 1]``, ``Psi' <= 0`` and ``Psi >= 0`` on the grid."""
    r = solve_radius(prob).radius if r is None else r
    _, (val, d1, _) = _psi_grid(prob, r, a_steps)
    return bool(np.all(np.diff(val) <= tol) and np.all(d1 <= tol) and np.all(val >= -tol))


def convexity_check(prob: RadiusProblem, r: Optional[float] = None, a_steps: int = 1000,
                    tol: float = PSI_TOL) -> bool:
    """``Psi'' >= 0`` on the grid (expected for ``p <= 1``)."""
    r = solve_radius(prob).radius if r is None else r
    _, (_, _, d2) = _psi_grid(prob, r, a_steps)
    return bool(np.all(d2 >= -tol))


def psi_report(prob: RadiusProblem, r: Optional[float] = None, a_steps: int = 1000) -> dict:
    radius = solve_radius(prob).radius
    r = radius if r is None else r
    val, d1, _ = core.psi(1.0, prob, r)
    return {"problem": prob.to_dict(), "radius": radius, "r": r, "psi_at_1": val,
            "dpsi_at_1": d1, "monotone": monotonicity_check(prob, r, a_steps),
            "convex": convexity_check(prob, r, a_steps) if prob.p <= 1 else None}


def lemma_c_check(h: FunctionLike, k: float, lam: complex, w: W.WeightSequence, r: float,
                  scale: float = 1.0, T: int = DEFAULT_ORDER) -> tuple[float, float]:
    """``(sum |b_n|^2 phi_n(r), k^2 sum |a_n|^2 phi_n(r))`` for ``b_n = scale lam k a_n``."""
    h = _as_function(h, T)
    if isinstance(h, HarmonicPair):
        h = h.h
    pair = proportional_pair(h, k, lam, scale)
    n = np.arange(1, h.order + 1)
    phi = W.term(w, n, r)
    lhs = float(np.sum(np.abs(pair.g.coeffs[1:]) ** 2 * phi))
    rhs = float(k * k * np.sum(np.abs(h.coeffs[1:]) ** 2 * phi))
    return lhs, rhs


def regression_problems() -> list[RadiusProblem]:
    """Problems covering both inequalities, every weight shape and the limit form."""
    geo, ev = W.geometric(), W.even()
    return [
        RadiusProblem(m=1, p=0.5),
        RadiusProblem(m=1, p=1.0),
        RadiusProblem(m=1, p=1.5),
        RadiusProblem(m=1, p=2.0),
        RadiusProblem(m=1, p=1.0, k=1.0),
        RadiusProblem(m=2, p=2.0, k=0.5),
        RadiusProblem(m=3, p=1.5, k=0.25),
        RadiusProblem(p=1.0, k=0.5, weights=geo, limit_m=True),
        RadiusProblem(p=2.0, weights=geo, limit_m=True),
        RadiusProblem(m=1, p=1.0, weights=ev),
        RadiusProblem(m=2, p=2.0, k=0.5, weights=ev),
        RadiusProblem(p=1.0, weights=W.lacunary(2), limit_m=True),
        RadiusProblem(m=3, p=2.0, weights=W.lacunary(3)),
        RadiusProblem(m=1, p=1.0, N=2),
        RadiusProblem(m=2, p=2.0, N=3),
        RadiusProblem(m=1, p=0.5, N=2, weights=ev),
    ]


def _table_entries():
    for p in (0.5, 1.0, 1.5, 2.0):
        yield "R_p", {"p": p}
    for k in (0.0, 0.5, 1.0):
        for p in (1.0, 2.0):
            yield "R_k_p", {"p": p, "k": k}
    for name in ("K_form_a", "K_form_b"):
        for K in (1.0, 2.0, 3.0, 1e6):
            yield name, {"K": K}
    for p in (1.0, 2.0):
        yield "p_over_2_plus_p", {"p": p}
    yield "sqrt2_minus_1", {}
    for k in (2, 3):
        for p in (1.0, 2.0):
            yield "lacunary", {"p": p, "k": k}
    for N in (1, 2, 3):
        for p in (1.0, 2.0):
            yield "rho_poly", {"m": 1, "N": N, "p": p}


TABLE_COLUMNS = ("name", "params", "closed_form", "solver_value", "abs_diff")


def radius_table() -> list[dict]:
    """Every explicit radius next to the solver root of its characteristic equation."""
    rows = []
    for name, params in _table_entries():
        closed = closed_form_radius(name, **params)
        solved = solve_radius(matching_problem(name, **params)).radius
        label = ";".join(f"{k}={v:g}" for k, v in params.items())
        rows.append({"name": name, "params": label, "closed_form": closed,
                     "solver_value": solved, "abs_diff": abs(closed - solved)})
    return rows


__all__ = [
    "VerificationReport", "SharpnessReport", "verify_inequality", "sharpness_probe",
    "monotonicity_check", "convexity_check", "psi_report", "lemma_c_check",
    "regression_problems", "radius_table", "extremal_lhs", "k_from_K", "TABLE_COLUMNS",
]
