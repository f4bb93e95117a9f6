"""Truncated power-series arithmetic on coefficient arrays.

Series are 1-D complex arrays ``c`` with ``c[n]`` the coefficient of
``z**n``; results are truncated to order ``T`` (``T + 1`` coefficients).
"""

from __future__ import annotations

import numpy as np


def _pad(c, T: int) -> np.ndarray:
    c = np.asarray(c, dtype=complex)[: T + 1]
    out = np.zeros(T + 1, dtype=complex)
    out[: c.size] = c
    return out


def mul(a, b, T: int) -> np.ndarray:
    a = np.asarray(a, dtype=complex)[: T + 1]
    b = np.asarray(b, dtype=complex)[: T + 1]
    return _pad(np.convolve(a, b), T)


def div(a, b, T: int) -> np.ndarray:
    """Quotient ``a / b`` to order ``T``; requires ``b[0] != 0``.

    Solves ``b * q = a`` term by term:
    ``q[n] = (a[n] - sum_{j=1}^{n} b[j] q[n-j]) / b[0]``.
    """
    a = _pad(a, T)
    b = np.asarray(b, dtype=complex)[: T + 1]
    if b.size == 0 or b[0] == 0:
        raise ZeroDivisionError("series denominator has zero constant term")
    q = np.zeros(T + 1, dtype=complex)
    rb = b[1:][::-1]  # reversed b[1:], so a window dot gives the convolution
    L = rb.size
    for n in range(T + 1):
        j = min(n, L)
        acc = a[n]
        if j:
            acc -= np.dot(rb[L - j:], q[n - j:n])
        q[n] = acc / b[0]
    return q


def shift(a, T: int) -> np.ndarray:
    """Multiply by ``z``."""
    a = np.asarray(a, dtype=complex)
    out = np.zeros(T + 1, dtype=complex)
    out[1:] = a[:T]
    return out


def polyval(c, z):
    """Evaluate the truncated series at ``z`` (scalar or array)."""
    return np.polynomial.polynomial.polyval(z, np.asarray(c, dtype=complex))
