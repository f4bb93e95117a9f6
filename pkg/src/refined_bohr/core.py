"""Weighted coefficient sums, the refined quadratic term and the proof functions.

All sums accept a scalar or 1-D array of radii ``r`` in ``[0, 1)``.  Each
truncated sum has a ``full_output`` form returning ``(value, remainder)``,
where ``remainder`` is a certified upper bound on the neglected tail, built
from the Schwarz-Pick bound ``|a_n| <= 1 - |a_0|^2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import weights as W
from .errors import DomainError
from .functions import HarmonicPair, SeriesFunction
from .weights import WeightSequence, check_radius


@dataclass(frozen=True)
class RadiusProblem:
    """Parameters naming one characteristic equation.

    ``limit_m`` replaces ``z**m`` by its ``m -> infinity`` limit, i.e.
    ``|h(z**m)|`` becomes ``|h(0)|`` and ``x**m`` becomes ``0``.
    """

    m: int = 1
    p: float = 1.0
    k: float = 0.0
    N: int = 1
    weights: WeightSequence = field(default_factory=W.geometric)
    limit_m: bool = False

    def __post_init__(self):
        if not 0 < self.p <= 2:
            raise DomainError("p must lie in (0, 2]")
        if not 0 <= self.k <= 1:
            raise DomainError("k must lie in [0, 1]")
        if int(self.m) != self.m or self.m < 1:
            raise DomainError("m must be an integer >= 1")
        if int(self.N) != self.N or self.N < 1:
            raise DomainError("N must be an integer >= 1")
        if self.N > 1 and self.k != 0:
            raise DomainError("tail start N > 1 is only defined for the analytic case k = 0")

    def power_m(self, x):
        """``x**m``, or ``0`` in the ``m -> infinity`` limit."""
        x = np.asarray(x, dtype=float)
        return np.zeros_like(x) if self.limit_m else x ** self.m

    def to_dict(self) -> dict:
        return {"m": None if self.limit_m else self.m, "p": self.p, "k": self.k, "N": self.N,
                "weights": self.weights.spec(), "limit_m": self.limit_m}


def _scalar(x):
    x = np.asarray(x)
    return float(x) if x.ndim == 0 else x


def _indices(f: SeriesFunction, start: int) -> np.ndarray:
    return np.arange(start, f.order + 1)


@lru_cache(maxsize=32)
def _weight_matrices(w: WeightSequence, r_bytes: bytes, T: int):
    r = np.frombuffer(r_bytes)
    n = np.arange(1, T + 1)
    rr = r[:, None]
    mats = (W.term(w, n, rr), W.term(w, 2 * n, rr), W.tail(w, 2 * n + 1, rr))
    for mat in mats:
        mat.setflags(write=False)
    return mats


def _matrices(w: WeightSequence, r: np.ndarray, T: int):
    """``phi_n(r)``, ``phi_2n(r)`` and ``Phi_{2n+1}(r)`` for ``n = 1..T``, one row per radius."""
    flat = np.ascontiguousarray(r, dtype=float).reshape(-1)
    return _weight_matrices(w, flat.tobytes(), T)


def bohr_sum(f: SeriesFunction, w: WeightSequence, N: int, r, full_output=False):
    """``B_N(f, phi, r) = sum_{n >= N} |a_n| phi_n(r)`` truncated at ``f.order``."""
    r = check_radius(r)
    if N < 1:
        raise DomainError("N must be >= 1")
    phi = _matrices(w, r, f.order)[0]
    value = (phi[:, N - 1:] @ np.abs(f.coeffs[N:])).reshape(r.shape)
    if not full_output:
        return _scalar(value)
    start = max(N, f.order + 1)
    rem = (1 - f.abs_a0 ** 2) * W.tail(w, start, r)
    return _scalar(value), _scalar(rem)


def bohr_sum0(f: SeriesFunction, r, full_output=False):
    """``B_0(f, r) = |a_0| + B_1(f, r)`` for geometric weights (``phi_0 = 1``)."""
    out = bohr_sum(f, W.geometric(), 1, r, full_output=True)
    value = f.abs_a0 + np.asarray(out[0])
    return (_scalar(value), out[1]) if full_output else _scalar(value)


def norm_sq_r(f: SeriesFunction, r, full_output=False):
    """``||f_0||_r^2 = sum_{n >= 1} |a_n|^2 r^(2n)``."""
    r = check_radius(r)
    n = _indices(f, 1)
    value = (r[..., None] ** (2 * n)) @ (np.abs(f.coeffs[1:]) ** 2)
    if not full_output:
        return _scalar(value)
    T = f.order
    rem = (1 - f.abs_a0 ** 2) ** 2 * r ** (2 * (T + 1)) / (1 - r * r)
    return _scalar(value), _scalar(rem)


def refined_A(f: SeriesFunction, w: WeightSequence, r, full_output=False):
    """``A(f_0, phi, r) = sum_{n >= 1} |a_n|^2 (phi_2n(r)/(1 + |a_0|) + Phi_{2n+1}(r))``."""
    r = check_radius(r)
    _, even_phi, odd_tail = _matrices(w, r, f.order)
    weight = even_phi / (1 + f.abs_a0) + odd_tail
    value = (weight @ (np.abs(f.coeffs[1:]) ** 2)).reshape(r.shape)
    if not full_output:
        return _scalar(value)
    # phi_2n + Phi_{2n+1} <= r^(2n)/(1-r), summed over n > T
    T = f.order
    rem = (1 - f.abs_a0 ** 2) ** 2 * r ** (2 * (T + 1)) / ((1 - r) * (1 - r * r))
    return _scalar(value), _scalar(rem)


def refined_A_closed(f: SeriesFunction, r, full_output=False):
    """Geometric-weight form ``(1/(1 + |a_0|) + r/(1 - r)) ||f_0||_r^2``."""
    r = check_radius(r)
    factor = 1 / (1 + f.abs_a0) + r / (1 - r)
    value, rem = norm_sq_r(f, r, full_output=True)
    value = factor * np.asarray(value)
    return (_scalar(value), _scalar(factor * rem)) if full_output else _scalar(value)


def _check_circle(z, r):
    z = np.asarray(z, dtype=complex)
    r = float(r)
    if np.any(np.abs(np.abs(z) - r) > 1e-12):
        raise ValueError("every z must satisfy |z| = r")
    return z, r


def modulus_term(f: SeriesFunction, prob: RadiusProblem, z):
    """``|f(z**m)|**p`` (``|f(0)|**p`` in the limit) and its evaluation error."""
    z = np.asarray(z, dtype=complex)
    zm = np.zeros_like(z) if prob.limit_m else z ** prob.m
    val, err = f.evaluate(zm)
    mod = np.abs(val)
    # |(|v| + e)^p - |v|^p| <= p e (|v| + e)^(p-1) for p >= 1, <= e^p otherwise
    if err:
        err = p_err(np.max(mod, initial=0.0), err, prob.p)
    return mod ** prob.p, err


def p_err(v: float, e: float, p: float) -> float:
    if p >= 1:
        return p * e * (v + e) ** (p - 1)
    return e ** p


def pair_sums(pair: HarmonicPair, w: WeightSequence, r):
    """``B_1(h) + B_1(g) + A(h_0)`` and its remainder bound.

    The weight matrices depend only on ``(w, r, T)`` and are cached, so
    sweeping many functions over one radius grid costs one evaluation.
    """
    r = check_radius(r)
    h = pair.h
    phi, even_phi, odd_tail = _matrices(w, r, h.order)
    quad = even_phi / (1 + h.abs_a0) + odd_tail
    absa = np.abs(h.coeffs[1:])
    value = (phi @ absa + phi @ np.abs(pair.g.coeffs[1:]) + quad @ absa ** 2).reshape(r.shape)
    T = h.order
    sp = 1 - h.abs_a0 ** 2
    # |b_n| <= k * scale * (1 - |a_0|^2) beyond the prefix
    rem = ((1 + pair.k * pair.scale) * sp * W.tail(w, T + 1, r)
           + sp ** 2 * r ** (2 * (T + 1)) / ((1 - r) * (1 - r * r)))
    return np.asarray(value), np.asarray(rem)


def lhs_theorem1(pair: HarmonicPair, prob: RadiusProblem, z, r, full_output=False):
    """``|h(z^m)|^p + B_1(h) + B_1(g) + A(h_0)`` for ``|z| = r`` (``z`` may be an array)."""
    if prob.N != 1:
        raise ValueError("the harmonic inequality uses N = 1")
    z, r = _check_circle(z, r)
    mod, e0 = modulus_term(pair.h, prob, z)
    sums, rem = pair_sums(pair, prob.weights, r)
    value = _scalar(mod + sums)
    return (value, float(e0 + rem)) if full_output else value


def lhs_theorem2(f: SeriesFunction, prob: RadiusProblem, z, r, full_output=False):
    """``|f(z^m)|^p + B_N(f, phi, r)`` for ``|z| = r``."""
    if prob.k != 0:
        raise ValueError("the analytic inequality uses k = 0")
    z, r = _check_circle(z, r)
    mod, e0 = modulus_term(f, prob, z)
    b, e1 = bohr_sum(f, prob.weights, prob.N, r, full_output=True)
    value = _scalar(mod + b)
    return (value, e0 + e1) if full_output else value


def envelope(prob: RadiusProblem, a, r):
    """Schwarz-Pick bound ``((r^m + a)/(1 + r^m a))**p`` on ``|f(z^m)|**p``."""
    rm = prob.power_m(r)
    return ((rm + a) / (1 + rm * a)) ** prob.p


def _tail_sum(prob: RadiusProblem, r):
    return W.tail(prob.weights, prob.N, r)


def psi(a, prob: RadiusProblem, r):
    """``(Psi(a), Psi'(a), Psi''(a))`` with

    ``Psi(a) = 1 - (1 - a^2)(1 + k) Phi_N(r) - ((r^m + a)/(1 + r^m a))^p``.
    """
    a = np.asarray(a, dtype=float)
    if np.any(a < 0) or np.any(a > 1):
        raise DomainError("a must lie in [0, 1]")
    r = float(check_radius(r))
    p, k = prob.p, prob.k
    phi = _tail_sum(prob, r)
    rm = float(prob.power_m(r))
    s = rm + a
    t = 1 + rm * a
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        value = 1 - (1 - a * a) * (1 + k) * phi - (s / t) ** p
        d1 = 2 * a * (1 + k) * phi - p * (1 - rm * rm) * s ** (p - 1) / t ** (p + 1)
        bracket = p - 1 - 2 * a * rm - (p + 1) * rm * rm
        curv = np.where(bracket == 0, 0.0, s ** (p - 2) / t ** (p + 2) * bracket)
        d2 = 2 * (1 + k) * phi - p * (1 - rm * rm) * curv
    return _scalar(value), _scalar(d1), _scalar(d2)


def one_minus_power(u_gap, p):
    """``1 - (1 - u_gap)**p`` without cancellation for small ``u_gap``."""
    return -np.expm1(p * np.log1p(-u_gap))


def q_function(a, prob: RadiusProblem, r):
    """``Q(a, r) = (1+a)(1+k) sum_{n>=N} a^(n-1) phi_n(r) - (1 - u^p)/(1 - a)``,

    ``u = (r^m + a)/(1 + r^m a)``.  The weighted sum is evaluated in closed form.
    """
    a = np.asarray(a, dtype=float)
    if np.any(a < 0) or np.any(a >= 1):
        raise DomainError("a must lie in [0, 1); use q_limit at a = 1")
    r = float(check_radius(r))
    rm = float(prob.power_m(r))
    S = W.power_sum(prob.weights, a, r, prob.N)
    # 1 - u = (1 - a)(1 - r^m)/(1 + r^m a) exactly
    gap = (1 - a) * (1 - rm) / (1 + rm * a)
    value = (1 + a) * (1 + prob.k) * S - one_minus_power(gap, prob.p) / (1 - a)
    return _scalar(value)


def q_limit(prob: RadiusProblem, r):
    """``lim_{a -> 1-} Q(a, r) = 2(1+k) Phi_N(r) - p (1 - r^m)/(1 + r^m)``."""
    r = check_radius(r)
    rm = prob.power_m(r)
    return _scalar(2 * (1 + prob.k) * _tail_sum(prob, r) - prob.p * (1 - rm) / (1 + rm))


def theorem_b_gap(f: SeriesFunction, w: WeightSequence, r, full_output=False):
    """``(B_1 + A, (1 - |a_0|^2) Phi_1(r))``; the first never exceeds the second."""
    b, e1 = bohr_sum(f, w, 1, r, full_output=True)
    A, e2 = refined_A(f, w, r, full_output=True)
    lhs = _scalar(np.asarray(b) + A)
    rhs = _scalar((1 - f.abs_a0 ** 2) * W.tail(w, 1, r))
    if full_output:
        return lhs, rhs, _scalar(np.asarray(e1) + e2)
    return lhs, rhs
