"""Scalar special functions shared by the polynomial and integral modules.

Everything here accepts plain floats; the series-based functions also accept
numpy arrays and broadcast elementwise, which the quadrature oracle relies on.
Array inputs keep their floating dtype, so ``np.longdouble`` nodes are
evaluated in extended precision.
"""
from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

__all__ = [
    "DomainError",
    "compensated_sum",
    "reciprocal_gamma",
    "rgamma_ratio",
    "wright2",
    "bessel_tricomi0",
    "classical_laguerre",
]

_FACTORIAL_MAX = 170
# 1/k! correctly rounded from the exact rational.
_INV_FACTORIAL = tuple(float(Fraction(1, math.factorial(k))) for k in range(_FACTORIAL_MAX + 1))

_SERIES_RTOL = 1e-17
_SERIES_MAX_TERMS = 2000


class DomainError(ValueError):
    """Argument outside the admissible domain of a special function."""


def _real(x) -> np.ndarray:
    """``x`` as a floating array, keeping an existing float dtype."""
    x = np.asarray(x)
    if not np.issubdtype(x.dtype, np.floating):
        x = x.astype(float)
    return x


def _as_result(value):
    arr = np.asarray(value)
    if arr.ndim == 0:
        return float(arr)
    return arr


def compensated_sum(terms):
    """Neumaier-compensated sum of an iterable of floats or equally-shaped arrays.

    Summation order is the iteration order.
    """
    total = None
    comp = None
    for term in terms:
        term = _real(term)
        if total is None:
            total = term.copy() if term.ndim else term
            comp = np.zeros_like(term)
            continue
        t = total + term
        big = np.abs(total) >= np.abs(term)
        comp = comp + np.where(big, (total - t) + term, (term - t) + total)
        total = t
    if total is None:
        return 0.0
    return _as_result(total + comp)


def reciprocal_gamma(g: float) -> float:
    """Return ``1 / Gamma(g + 1)``, the vacuum value of ``c**g``.

    Integer arguments up to 170 come from a table of correctly rounded
    ``1/k!`` values. Other arguments use :func:`math.gamma`, switching to
    ``exp(-lgamma)`` when ``Gamma(g + 1)`` would overflow.
    """
    g = float(g)
    if not math.isfinite(g) or g <= -1.0:
        raise DomainError(f"reciprocal_gamma requires g > -1, got {g!r}")
    if g.is_integer() and g <= _FACTORIAL_MAX:
        return _INV_FACTORIAL[int(g)]
    if g + 1.0 < 171.0:
        return 1.0 / math.gamma(g + 1.0)
    return math.exp(-math.lgamma(g + 1.0))


def rgamma_ratio(top: float, bottom: float, dtype=float):
    """``Gamma(top + 1) / Gamma(bottom + 1)`` for ``top - bottom`` a non-negative integer.

    Evaluated as a finite product in ``dtype`` so no intermediate Gamma value
    can overflow.
    """
    steps = top - bottom
    if steps < 0 or not float(steps).is_integer():
        raise ValueError("top - bottom must be a non-negative integer")
    if bottom <= -1.0:
        raise DomainError(f"bottom must exceed -1, got {bottom!r}")
    base = np.dtype(dtype).type(bottom)
    out = np.dtype(dtype).type(1)
    for j in range(1, int(steps) + 1):
        out *= base + j
    return out if dtype is not float else float(out)


def _entire_series(first, ratio, x):
    """Sum ``sum_k term_k`` with ``term_{k+1} = term_k * ratio(k, x)``.

    Stops, per element, once two consecutive terms fall below
    ``1e-17 * |partial sum|``.
    """
    x = _real(x)
    term = np.full_like(x, first)
    total = term.copy()
    comp = np.zeros_like(x)
    quiet = np.zeros(x.shape, dtype=int)
    for k in range(_SERIES_MAX_TERMS):
        term = term * ratio(k, x)
        t = total + term
        big = np.abs(total) >= np.abs(term)
        comp += np.where(big, (total - t) + term, (term - t) + total)
        total = t
        small = np.abs(term) <= _SERIES_RTOL * np.abs(total + comp)
        quiet = np.where(small, quiet + 1, 0)
        if np.all(quiet >= 2):
            break
    return _as_result(total + comp)


def wright2(nu: float, x):
    """Second-order Bessel-Wright function ``sum_k x**k / (k! Gamma(2k + nu + 1))``.

    Entire in ``x``; ``nu`` must exceed -1.
    """
    nu = float(nu)
    if nu <= -1.0:
        raise DomainError(f"wright2 requires nu > -1, got {nu!r}")
    return _entire_series(
        reciprocal_gamma(nu),
        lambda k, x: x / ((k + 1.0) * (2.0 * k + nu + 1.0) * (2.0 * k + nu + 2.0)),
        x,
    )


def bessel_tricomi0(x):
    """Entire series ``sum_k (-x)**k / (k!)**2``.

    Equals ``J0(2 sqrt(x))`` for ``x >= 0`` and ``I0(2 sqrt(-x))`` for ``x < 0``.
    """
    return _entire_series(1.0, lambda k, x: -x / ((k + 1.0) * (k + 1.0)), x)


def classical_laguerre(n: int, nu: float, x):
    """Associated Laguerre polynomial ``L_n^(nu)(x)`` by the three-term recurrence."""
    if n < 0:
        raise ValueError(f"degree must be non-negative, got {n}")
    nu = float(nu)
    if nu <= -1.0:
        raise DomainError(f"classical_laguerre requires nu > -1, got {nu!r}")
    x = _real(x)
    prev = np.ones_like(x)
    if n == 0:
        return _as_result(prev)
    cur = 1.0 + nu - x
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1 + nu - x) * cur - (k + nu) * prev) / (k + 1)
    return _as_result(cur)
