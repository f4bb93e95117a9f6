"""Coefficient models of bounded analytic self-maps of the disk.

Every builder here returns a function that lies in the closed unit ball of
``H_inf`` by construction: Moebius automorphisms, finite Blaschke products
and functions generated from Schur parameters.  Harmonic pairs ``(h, g)``
are built with ``g' = lambda * k * h'`` so that the dilation bound
``|g'| <= k |h'|`` holds by construction.

Function spec strings accepted by :func:`parse_function`::

    mobius:a=<float>
    blaschke:zeros=<c1;c2;...>
    schur:gammas=<c1;c2;...>
    extremal:a=<float>,k=<float>

Complex literals are ``<re>[+<im>i]``, e.g. ``0.3-0.2i``.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from . import series
from .errors import DomainError, SpecError

DEFAULT_ORDER = 512
SCHWARZ_PICK_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class SeriesFunction:
    """Taylor prefix ``a_0..a_T`` of a function in the unit ball.

    ``tail_M`` and ``tail_q`` bound the unseen coefficients,
    ``|a_n| <= tail_M * tail_q**n`` for ``n > T``.  For members of the unit
    ball ``M = q = 1`` is always valid.
    """

    coeffs: np.ndarray
    label: str = ""
    exact_eval: Optional[Callable] = field(default=None, repr=False)
    tail_M: float = 1.0
    tail_q: float = 1.0

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex)
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    @property
    def a0(self) -> complex:
        return complex(self.coeffs[0])

    @property
    def abs_a0(self) -> float:
        return abs(self.coeffs[0])

    def __call__(self, z):
        return self.evaluate(z)[0]

    def evaluate(self, z):
        """Return ``(f(z), error_bound)``.

        Uses the closed form when available (error 0); otherwise the
        truncated series plus the geometric tail bound at ``|z|``.
        """
        z = np.asarray(z, dtype=complex)
        if self.exact_eval is not None:
            return self.exact_eval(z), 0.0
        rq = float(np.max(np.abs(z), initial=0.0)) * self.tail_q
        if rq >= 1:
            raise DomainError("series tail bound diverges at this |z|")
        err = self.tail_M * rq ** (self.order + 1) / (1 - rq)
        return series.polyval(self.coeffs, z), err

    def truncated(self, z):
        return series.polyval(self.coeffs, np.asarray(z, dtype=complex))


@dataclass(frozen=True, eq=False)
class HarmonicPair:
    """Analytic and co-analytic parts of ``f = h + conj(g)`` with ``g(0) = 0``."""

    h: SeriesFunction
    g: SeriesFunction
    k: float
    lam: complex = 1.0
    scale: float = 1.0

    @property
    def label(self) -> str:
        return f"pair(h={self.h.label},k={self.k:g})"


def _check_unit(values, what: str):
    for v in values:
        if abs(v) >= 1:
            raise DomainError(f"{what} must lie in the open unit disk, got {v}")


def mobius(a: float, T: int = DEFAULT_ORDER) -> SeriesFunction:
    """``(a - z) / (1 - a z)`` with ``a_0 = a``, ``a_n = -(1 - a^2) a^(n-1)``."""
    a = float(a)
    if not 0 <= a < 1:
        raise DomainError("mobius parameter must satisfy 0 <= a < 1")
    if T < 1:
        raise ValueError("order T must be >= 1")
    n = np.arange(1, T + 1)
    coeffs = np.empty(T + 1, dtype=complex)
    coeffs[0] = a
    coeffs[1:] = -(1 - a * a) * a ** (n - 1)
    return SeriesFunction(coeffs, f"mobius:a={a!r}", lambda z: (a - z) / (1 - a * z))


def blaschke(zeros: Sequence[complex], T: int = DEFAULT_ORDER) -> SeriesFunction:
    """Finite Blaschke product of factors ``(alpha - z) / (1 - conj(alpha) z)``."""
    zeros = [complex(z) for z in zeros]
    if not zeros:
        raise ValueError("need at least one zero")
    _check_unit(zeros, "Blaschke zeros")
    num = np.array([1.0 + 0j])
    den = np.array([1.0 + 0j])
    for al in zeros:
        num = np.convolve(num, [al, -1.0])
        den = np.convolve(den, [1.0, -al.conjugate()])
    coeffs = series.div(num, den, T)

    def exact(z):
        out = np.ones_like(z)
        for al in zeros:
            out = out * (al - z) / (1 - al.conjugate() * z)
        return out

    label = "blaschke:zeros=" + ";".join(_fmt_complex(z) for z in zeros)
    f = SeriesFunction(coeffs, label, exact)
    _assert_schwarz_pick(f)
    return f


def schur(gammas: Sequence[complex], T: int = DEFAULT_ORDER) -> SeriesFunction:
    """Function with Schur parameters ``gammas`` via the backward recursion.

    ``w_d = gamma_d`` and ``w_j = (gamma_j + z w_{j+1}) / (1 + conj(gamma_j) z w_{j+1})``;
    each step composes a disk automorphism with ``z w``, so ``|w_0| <= 1``.
    """
    gammas = [complex(g) for g in gammas]
    if not gammas:
        raise ValueError("need at least one Schur parameter")
    _check_unit(gammas, "Schur parameters")
    w = np.zeros(T + 1, dtype=complex)
    w[0] = gammas[-1]
    for gm in reversed(gammas[:-1]):
        zw = series.shift(w, T)
        num = zw.copy()
        num[0] += gm
        den = gm.conjugate() * zw
        den[0] += 1.0
        w = series.div(num, den, T)

    def exact(z):
        out = np.full(np.shape(z), gammas[-1], dtype=complex)
        for gm in reversed(gammas[:-1]):
            zw = z * out
            out = (gm + zw) / (1 + gm.conjugate() * zw)
        return out

    label = "schur:gammas=" + ";".join(_fmt_complex(g) for g in gammas)
    f = SeriesFunction(w, label, exact)
    _assert_schwarz_pick(f)
    return f


def coefficients(coeffs: Sequence[complex], label: str = "coeffs") -> SeriesFunction:
    """Uncertified coefficient list (for negative tests only)."""
    return SeriesFunction(np.asarray(coeffs, dtype=complex), label)


def proportional_pair(h: SeriesFunction, k: float, lam: complex = 1.0,
                      scale: float = 1.0) -> HarmonicPair:
    """Pair with ``b_n = scale * lam * k * a_n`` for ``n >= 1`` and ``b_0 = 0``.

    ``scale`` in ``[0, 1]`` shrinks the co-analytic part; the dilation is then
    ``scale * k <= k``.
    """
    if not 0 <= k <= 1:
        raise DomainError("dilation bound k must lie in [0, 1]")
    if abs(abs(lam) - 1) > 1e-12:
        raise DomainError("lambda must be unimodular")
    if not 0 <= scale <= 1:
        raise DomainError("scale must lie in [0, 1]")
    c = scale * lam * k
    b = c * np.asarray(h.coeffs)
    b[0] = 0
    exact = None
    if h.exact_eval is not None:
        h0 = h.a0
        exact = lambda z: c * (h.exact_eval(z) - h0)  # noqa: E731
    g = SeriesFunction(b, f"g[{c!r}*h]", exact)
    return HarmonicPair(h, g, float(k), complex(lam), float(scale))


def extremal_pair(a: float, k: float, lam: complex = 1.0, T: int = DEFAULT_ORDER) -> HarmonicPair:
    """``h = (a - z)/(1 - a z)`` and ``g = lam * k * (h - h(0))``."""
    return proportional_pair(mobius(a, T), k, lam)


def schwarz_pick_check(f: SeriesFunction, tol: float = SCHWARZ_PICK_TOL) -> bool:
    """``|a_n| <= 1 - |a_0|^2`` for every stored ``n >= 1``."""
    bound = 1 - f.abs_a0 ** 2
    return bool(np.all(np.abs(f.coeffs[1:]) <= bound + tol))


def _assert_schwarz_pick(f: SeriesFunction):
    if not schwarz_pick_check(f):
        raise AssertionError(f"{f.label} violates the Schwarz-Pick coefficient bound")


def _fmt_complex(z: complex) -> str:
    if z.imag == 0:
        return repr(z.real)
    return f"{z.real!r}{z.imag:+}i"


def parse_complex(text: str) -> complex:
    try:
        return complex(text.strip().replace("i", "j"))
    except ValueError as exc:
        raise SpecError(f"bad complex literal {text!r}") from exc


def _parse_params(body: str) -> dict[str, str]:
    out = {}
    for item in body.split(","):
        if "=" not in item:
            raise SpecError(f"expected key=value, got {item!r}")
        key, val = item.split("=", 1)
        out[key.strip()] = val.strip()
    return out


def parse_function(text: str, T: int = DEFAULT_ORDER):
    """Build a :class:`SeriesFunction` (or :class:`HarmonicPair` for ``extremal``)."""
    kind, _, body = text.strip().partition(":")
    params = _parse_params(body) if body else {}
    try:
        if kind == "mobius":
            return mobius(float(params["a"]), T)
        if kind == "blaschke":
            return blaschke([parse_complex(c) for c in params["zeros"].split(";")], T)
        if kind == "schur":
            return schur([parse_complex(c) for c in params["gammas"].split(";")], T)
        if kind == "extremal":
            return extremal_pair(float(params["a"]), float(params.get("k", 0.0)), T=T)
    except KeyError as exc:
        raise SpecError(f"missing parameter {exc} in {text!r}") from exc
    except DomainError as exc:
        raise SpecError(str(exc)) from exc
    except ValueError as exc:
        raise SpecError(f"bad function spec {text!r}: {exc}") from exc
    raise SpecError(f"unknown function kind {kind!r}")


def random_schur(rng: np.random.Generator, max_depth: int = 6, max_modulus: float = 0.95,
                 T: int = DEFAULT_ORDER) -> SeriesFunction:
    """Schur function with a random depth and parameters uniform in a disk."""
    depth = int(rng.integers(1, max_depth + 1))
    rad = max_modulus * np.sqrt(rng.random(depth))
    ang = rng.uniform(0, 2 * np.pi, depth)
    return schur([cmath.rect(r, t) for r, t in zip(rad, ang)], T)


def corpus(seed: int = 42, T: int = DEFAULT_ORDER, n_mobius: int = 20, n_blaschke: int = 10,
           n_schur: int = 200) -> list[SeriesFunction]:
    """Deterministic test corpus: Moebius, Blaschke and random Schur functions."""
    rng = np.random.default_rng(seed)
    out = [mobius(a, T) for a in np.linspace(0.0, 0.99, n_mobius)]
    fixed = [[0.5, -0.5], [0.0], [0.9, 0.9j]]
    for zs in fixed[:n_blaschke]:
        out.append(blaschke(zs, T))
    for _ in range(n_blaschke - len(fixed[:n_blaschke])):
        deg = int(rng.integers(1, 5))
        rad = 0.95 * np.sqrt(rng.random(deg))
        ang = rng.uniform(0, 2 * np.pi, deg)
        out.append(blaschke([cmath.rect(r, t) for r, t in zip(rad, ang)], T))
    out.extend(random_schur(rng, T=T) for _ in range(n_schur))
    return out
