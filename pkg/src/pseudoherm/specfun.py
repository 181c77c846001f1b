"""Orthogonal-polynomial evaluation used by the closed-form solutions.

Hermite polynomials follow the physicists' convention (leading coefficient
2^n); generalized Laguerre polynomials L_n^a require a > -1 so that the
weight x^a e^{-x} is integrable at the origin.  Both are evaluated by upward
three-term recurrence, which is forward-stable over the degrees used here
(n <= 30 or so; degrade gracefully beyond, no hard cap).
"""
from __future__ import annotations

import math

import numpy as np

from .errors import DomainError

__all__ = ["hermite", "laguerre", "log_factorial"]


def _as_array(x):
    arr = np.asarray(x, dtype=float)
    return arr, arr.ndim == 0


def hermite(n: int, x):
    """Physicists' Hermite polynomial H_n(x); x may be a scalar or array."""
    if n < 0 or n != int(n):
        raise DomainError(f"hermite degree must be a non-negative integer, got {n}")
    arr, scalar = _as_array(x)
    h0 = np.ones_like(arr)
    if n == 0:
        return float(h0) if scalar else h0
    h1 = 2.0 * arr
    for k in range(1, n):
        h0, h1 = h1, 2.0 * arr * h1 - 2.0 * k * h0
    return float(h1) if scalar else h1


def laguerre(n: int, a: float, x):
    """Generalized Laguerre polynomial L_n^a(x).

    The weight exponent must satisfy a > -1; anything else is rejected
    because the orthogonality relation (and every use in this package)
    breaks down there.
    """
    if n < 0 or n != int(n):
        raise DomainError(f"laguerre degree must be a non-negative integer, got {n}")
    if not a > -1.0:
        raise DomainError(f"laguerre weight exponent must satisfy a > -1, got {a}")
    arr, scalar = _as_array(x)
    l0 = np.ones_like(arr)
    if n == 0:
        return float(l0) if scalar else l0
    l1 = 1.0 + a - arr
    for k in range(1, n):
        # (k+1) L_{k+1} = (2k + 1 + a - x) L_k - (k + a) L_{k-1}
        l0, l1 = l1, ((2.0 * k + 1.0 + a - arr) * l1 - (k + a) * l0) / (k + 1.0)
    return float(l1) if scalar else l1


def log_factorial(n: int) -> float:
    """ln(n!), exact product for small n, log-gamma beyond."""
    if n < 0 or n != int(n):
        raise DomainError(f"log_factorial needs a non-negative integer, got {n}")
    if n <= 20:
        return math.log(math.factorial(n)) if n > 1 else 0.0
    return math.lgamma(n + 1.0)
