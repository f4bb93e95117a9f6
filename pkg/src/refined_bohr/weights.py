"""Masked geometric weight sequences and their closed-form tails.

A weight sequence assigns ``phi_n(r) = r**n`` to every index ``n`` in a
support set and ``0`` elsewhere.  The support is a disjoint union of
arithmetic progressions ``{s, s + d, s + 2d, ...}`` with ``s, d >= 1``, so
every tail ``Phi_N(r) = sum_{n >= N} phi_n(r)`` is a finite sum of
geometric series and is evaluated exactly (no truncation).

Spec strings accepted by :func:`parse_weights`::

    geometric            phi_n = r**n for all n >= 1
    even                 phi_n = r**n for even n only
    lacunary:<k>         phi_n = r**n for n divisible by k
    mask:<s>+<d>n,...    union of progressions s + d*j, j >= 0
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import DomainError, SpecError

GEOMETRIC = "geometric"
MASKED = "masked_geometric"


@dataclass(frozen=True)
class WeightSequence:
    kind: str
    support: tuple[tuple[int, int], ...]

    @property
    def is_geometric(self) -> bool:
        return self.support == ((1, 1),)

    @property
    def is_monotone(self) -> bool:
        """True when ``phi_n(r)`` is non-increasing in ``n`` for every r.

        That happens exactly when the support contains every ``n >= 1``.
        """
        period = math.lcm(*(d for _, d in self.support))
        start = max(s for s, _ in self.support)
        return all(_in_support(self.support, n) for n in range(1, start + period + 1))

    def spec(self) -> str:
        if self.kind == GEOMETRIC:
            return "geometric"
        if len(self.support) == 1:
            s, d = self.support[0]
            if (s, d) == (2, 2):
                return "even"
            if s == d:
                return f"lacunary:{d}"
        return "mask:" + ",".join(f"{s}+{d}n" for s, d in self.support)

    def __str__(self) -> str:
        return self.spec()


def make_weights(kind: str, support: Iterable[tuple[int, int]] | None = None) -> WeightSequence:
    """Validate a support description and build a :class:`WeightSequence`."""
    if kind == GEOMETRIC:
        if support is not None and tuple(map(tuple, support)) != ((1, 1),):
            raise ValueError("geometric weights have support {(1, 1)}")
        return WeightSequence(GEOMETRIC, ((1, 1),))
    if kind != MASKED:
        raise ValueError(f"unknown weight kind {kind!r}")
    if support is None:
        raise ValueError("masked weights need a support")
    progs = tuple((int(s), int(d)) for s, d in support)
    if not progs:
        raise ValueError("empty support")
    for s, d in progs:
        if s < 1:
            raise ValueError(f"offset {s} < 1: phi_0 is not part of a weight sequence")
        if d < 1:
            raise ValueError(f"stride {d} < 1")
    for i, (s1, d1) in enumerate(progs):
        for s2, d2 in progs[i + 1:]:
            # two upward progressions meet iff their offsets agree mod gcd
            if (s1 - s2) % math.gcd(d1, d2) == 0:
                raise ValueError(f"progressions {s1}+{d1}n and {s2}+{d2}n overlap")
    return WeightSequence(MASKED, progs)


def geometric() -> WeightSequence:
    return make_weights(GEOMETRIC)


def even() -> WeightSequence:
    return make_weights(MASKED, [(2, 2)])


def lacunary(k: int) -> WeightSequence:
    return make_weights(MASKED, [(k, k)])


_MASK_ITEM = re.compile(r"^\s*(\d+)\s*\+\s*(\d+)\s*n\s*$")


def parse_weights(text: str) -> WeightSequence:
    text = text.strip()
    if text == "geometric":
        return geometric()
    if text == "even":
        return even()
    try:
        if text.startswith("lacunary:"):
            return lacunary(int(text.split(":", 1)[1]))
        if text.startswith("mask:"):
            progs = []
            for item in text.split(":", 1)[1].split(","):
                m = _MASK_ITEM.match(item)
                if m is None:
                    raise SpecError(f"bad progression {item!r}")
                progs.append((int(m.group(1)), int(m.group(2))))
            return make_weights(MASKED, progs)
    except SpecError:
        raise
    except ValueError as exc:
        raise SpecError(f"bad weight spec {text!r}: {exc}") from exc
    raise SpecError(f"unknown weight spec {text!r}")


def _in_support(support, n: int) -> bool:
    return any(n >= s and (n - s) % d == 0 for s, d in support)


def check_radius(r):
    r = np.asarray(r, dtype=float)
    if np.any(r < 0) or np.any(r >= 1) or np.any(np.isnan(r)):
        raise DomainError("r must lie in [0, 1)")
    return r


def _first_member(s: int, d: int, N):
    """Smallest member of ``s + d*j`` that is ``>= N`` (vectorized in N)."""
    N = np.asarray(N, dtype=np.int64)
    return np.where(N <= s, s, s + ((N - s + d - 1) // d) * d)


def term(w: WeightSequence, n, r):
    """``phi_n(r)``: ``r**n`` on the support, exactly zero off it."""
    r = check_radius(r)
    n = np.asarray(n, dtype=np.int64)
    if np.any(n < 1):
        raise DomainError("weight index must be >= 1")
    if w.is_geometric:
        out = r ** n
    else:
        mask = np.zeros(n.shape, dtype=bool)
        for s, d in w.support:
            mask |= (n >= s) & ((n - s) % d == 0)
        if n.ndim == 1:
            # powers only on the support columns
            out = np.zeros(np.broadcast_shapes(r.shape, n.shape))
            out[..., mask] = r ** n[mask]
        else:
            out = np.where(mask, r ** n, 0.0)
    out = np.asarray(out, dtype=float)
    return out if out.ndim else float(out)


def tail(w: WeightSequence, N, r):
    """``Phi_N(r) = sum_{n >= N} phi_n(r)`` in closed form."""
    return power_sum(w, 1.0, r, N)


def power_sum(w: WeightSequence, t, r, N=1):
    """``sum_{n >= N} t**(n-1) * phi_n(r)`` in closed form, for ``0 <= t <= 1``.

    With ``t = 1`` this is the tail ``Phi_N(r)``; with ``t = a`` it is the
    weighted sum produced by the Moebius coefficients ``a**(n-1)``.
    """
    r = check_radius(r)
    t = np.asarray(t, dtype=float)
    if np.any(t < 0) or np.any(t > 1):
        raise DomainError("t must lie in [0, 1]")
    N = np.asarray(N, dtype=np.int64)
    if np.any(N < 1):
        raise DomainError("tail start N must be >= 1")
    unit = t.ndim == 0 and t == 1
    total = 0.0
    tr = t * r
    for s, d in w.support:
        n0 = _first_member(s, d, N)
        part = r ** n0 / (1.0 - tr ** d)
        total = total + (part if unit else t ** (n0 - 1) * part)
    total = np.asarray(total, dtype=float)
    return total if total.ndim else float(total)
