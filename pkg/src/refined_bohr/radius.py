"""Sharp radii: characteristic equation, root solver and closed-form registry."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from . import weights as W
from .core import RadiusProblem
from .errors import DomainError, NoRootError

SCAN_STEP = 1e-3
SCAN_UPPER = 1 - 1e-6
XTOL = 1e-15


@dataclass(frozen=True)
class RadiusResult:
    radius: float
    residual: float
    bracket: tuple[float, float]
    evaluations: int

    def to_dict(self) -> dict:
        return {"radius": self.radius, "residual": self.residual,
                "bracket": list(self.bracket), "evaluations": self.evaluations}


def characteristic(prob: RadiusProblem, x):
    """``F(x) = (2/p) ((1 + x^m)/(1 - x^m)) (1 + k) Phi_N(x)``; the radius solves ``F = 1``."""
    x = W.check_radius(x)
    xm = prob.power_m(x)
    out = (2 / prob.p) * ((1 + xm) / (1 - xm)) * (1 + prob.k) * W.tail(prob.weights, prob.N, x)
    out = np.asarray(out, dtype=float)
    return out if out.ndim else float(out)


def first_root(g: Callable, step: float = SCAN_STEP, upper: float = SCAN_UPPER,
               xtol: float = XTOL) -> tuple[float, float, float, int]:
    """Smallest sign change of ``g`` (negative to non-negative) on ``(0, upper)``.

    ``g`` must accept arrays.  The grid ``0, step, 2 step, ..., upper`` is
    scanned for the first crossing, which is then bisected until the bracket
    is narrower than ``xtol`` or cannot shrink in floating point.
    Returns ``(root, lo, hi, evaluations)``.
    """
    grid = np.append(np.arange(0.0, upper, step), upper)
    vals = np.asarray(g(grid))
    evals = grid.size
    neg = vals < 0
    cross = np.flatnonzero(neg[:-1] & ~neg[1:])
    if cross.size == 0:
        raise NoRootError(f"no sign change on (0, {upper})")
    i = int(cross[0])
    lo, hi = float(grid[i]), float(grid[i + 1])
    while hi - lo > xtol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        evals += 1
        if g(mid) < 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi), lo, hi, evals


@lru_cache(maxsize=4096)
def solve_radius(prob: RadiusProblem, xtol: float = XTOL) -> RadiusResult:
    """Minimal positive root of ``F(x) = 1``."""
    root, lo, hi, evals = first_root(lambda x: characteristic(prob, x) - 1, xtol=xtol)
    residual = abs(characteristic(prob, root) - 1)
    return RadiusResult(root, residual, (lo, hi), evals + 1)


def strictly_crosses(prob: RadiusProblem, radius: float, delta: float = 1e-8) -> bool:
    """``F(radius - delta) < 1 < F(radius + delta)``: the optimality condition holds."""
    return characteristic(prob, radius - delta) < 1 < characteristic(prob, radius + delta)


def polynomial_radius(m: int, N: int, p: float) -> float:
    """Minimal positive root of ``2 (1 + r^m) r^N - p (1 - r)(1 - r^m)``."""
    _check_p(p)

    def poly(r):
        r = np.asarray(r, dtype=float)
        return 2 * (1 + r ** m) * r ** N - p * (1 - r) * (1 - r ** m)

    return first_root(poly)[0]


def _check_p(p):
    if not 0 < p <= 2:
        raise DomainError("p must lie in (0, 2]")


def _check_k(k):
    if not 0 <= k <= 1:
        raise DomainError("k must lie in [0, 1]")


def _check_K(K):
    if K < 1:
        raise DomainError("K must be >= 1")


def k_from_K(K: float) -> float:
    """Dilation bound of a ``K``-quasiregular map: ``k = (K - 1)/(K + 1)``."""
    _check_K(K)
    return (K - 1) / (K + 1)


def _r_p(p):
    _check_p(p)
    return p / (math.sqrt(4 * p + 1) + p + 1)


def _r_k_p(p, k):
    _check_p(p)
    _check_k(k)
    return p / (2 * (1 + k) + p)


def _k_form_a(K):
    _check_K(K)
    return (K + 1) / (5 * K + 1)


def _k_form_b(K):
    _check_K(K)
    return (K + 1) / (3 * K + 1)


def _p_over_2_plus_p(p):
    _check_p(p)
    return p / (2 + p)


def _lacunary(p, k):
    _check_p(p)
    if int(k) != k or k < 1:
        raise DomainError("stride k must be an integer >= 1")
    return (p / (2 + p)) ** (1 / k)


CLOSED_FORMS: dict[str, Callable[..., float]] = {
    "R_p": _r_p,
    "R_k_p": _r_k_p,
    "K_form_a": _k_form_a,
    "K_form_b": _k_form_b,
    "p_over_2_plus_p": _p_over_2_plus_p,
    "sqrt2_minus_1": lambda: math.sqrt(2) - 1,
    "lacunary": _lacunary,
    "rho_poly": polynomial_radius,
}


def closed_form_radius(name: str, **params) -> float:
    """Evaluate a named explicit radius.

    ============== ===================== ===============================
    name           params                value
    ============== ===================== ===============================
    R_p            p                     p / (sqrt(4p+1) + p + 1)
    R_k_p          p, k                  p / (2(1+k) + p)
    K_form_a       K                     (K+1) / (5K+1)
    K_form_b       K                     (K+1) / (3K+1)
    p_over_2_plus_p p                    p / (2+p)
    sqrt2_minus_1                        sqrt(2) - 1
    lacunary       p, k                  (p / (2+p)) ** (1/k)
    rho_poly       m, N, p               root of 2(1+r^m) r^N = p(1-r)(1-r^m)
    ============== ===================== ===============================
    """
    try:
        fn = CLOSED_FORMS[name]
    except KeyError:
        raise ValueError(f"unknown closed form {name!r}") from None
    try:
        return float(fn(**params))
    except TypeError as exc:
        raise ValueError(f"bad parameters for {name}: {exc}") from None


def matching_problem(name: str, **params) -> RadiusProblem:
    """The characteristic-equation problem whose root the closed form names."""
    geo = W.geometric()
    if name == "R_p":
        return RadiusProblem(m=1, p=params["p"], weights=geo)
    if name == "R_k_p":
        return RadiusProblem(p=params["p"], k=params["k"], weights=geo, limit_m=True)
    if name == "K_form_a":
        return RadiusProblem(p=1.0, k=k_from_K(params["K"]), weights=geo, limit_m=True)
    if name == "K_form_b":
        return RadiusProblem(p=2.0, k=k_from_K(params["K"]), weights=geo, limit_m=True)
    if name == "p_over_2_plus_p":
        return RadiusProblem(p=params["p"], weights=geo, limit_m=True)
    if name == "sqrt2_minus_1":
        return RadiusProblem(m=1, p=1.0, weights=W.even())
    if name == "lacunary":
        return RadiusProblem(p=params["p"], weights=W.lacunary(int(params["k"])), limit_m=True)
    if name == "rho_poly":
        return RadiusProblem(m=params["m"], p=params["p"], N=params["N"], weights=geo)
    raise ValueError(f"unknown closed form {name!r}")
