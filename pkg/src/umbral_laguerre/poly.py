"""Explicit-sum evaluation of the two-variable polynomial families.

All real arguments broadcast as numpy arrays; a scalar call returns a float.
Sums run over ascending ``k`` with compensated accumulation. Degrees are
capped at :data:`MAX_DEGREE` to keep factorial coefficients well inside the
double range.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

import numpy as np

from .special import DomainError, _real, compensated_sum, reciprocal_gamma, rgamma_ratio, wright2

__all__ = [
    "MAX_DEGREE",
    "TwoIndexArgs",
    "PolyEval",
    "hermite2",
    "laguerre2",
    "laguerre_assoc",
    "q_poly",
    "hermite2_shift_expand",
    "hermite_2index",
    "q_2index",
    "t_poly",
    "q_poly_coefficients",
    "q_poly_operational",
    "generating_function_deviation",
]

MAX_DEGREE = 60


def _check_degree(*degrees: int) -> None:
    for d in degrees:
        if int(d) != d or d < 0:
            raise ValueError(f"degree must be a non-negative integer, got {d!r}")
        if d > MAX_DEGREE:
            raise ValueError(f"degree {d} exceeds the cap of {MAX_DEGREE}")


def _check_order(*orders: float) -> None:
    for o in orders:
        if not o > -1.0:
            raise DomainError(f"order parameter must exceed -1, got {o!r}")


def _pow(x, p: int):
    # |x|**p with the sign restored, so (-x)**p == (-1)**p * x**p bit for bit
    # (np.power on a negative base can differ by an ulp); 0.0**0 == 1.0
    mag = np.power(np.abs(x), p)
    return np.copysign(mag, x) if p % 2 else mag


def _coef(num: int, den: int, dtype):
    # exact ratio rounded once, in the working precision
    if dtype == np.float64:
        return float(Fraction(num, den))
    return dtype.type(num) / dtype.type(den)


def _two_index_coeff(m: int, n: int, k: int) -> int:
    # m! n! / ((m-k)! (n-k)! k!)
    return math.comb(m, k) * math.comb(n, k) * math.factorial(k)


def hermite2(n: int, x, y):
    """Kampé de Fériet Hermite polynomial ``H_n(x, y)``, generated by ``exp(x t + y t**2)``."""
    _check_degree(n)
    x, y = _real(x), _real(y)
    dt = np.result_type(x, y)
    terms = (
        _coef(math.factorial(n), math.factorial(n - 2 * k) * math.factorial(k), dt)
        * _pow(x, n - 2 * k)
        * _pow(y, k)
        for k in range(n // 2 + 1)
    )
    return compensated_sum(terms)


def laguerre2(n: int, x, y):
    """Two-variable Laguerre polynomial ``L_n(x, y)``; ``L_n(x, 1)`` is the classical one."""
    _check_degree(n)
    x, y = _real(x), _real(y)
    dt = np.result_type(x, y)
    terms = (
        _coef((-1) ** k * math.comb(n, k), math.factorial(k), dt) * _pow(x, k) * _pow(y, n - k)
        for k in range(n + 1)
    )
    return compensated_sum(terms)


def laguerre_assoc(n: int, nu: float, x, y):
    """Associated two-variable Laguerre polynomial ``L_n^(nu)(x, y)``.

    ``Gamma(n+nu+1)/n! * sum_k C(n,k) (-x)**k y**(n-k) / Gamma(k+nu+1)``; the Gamma
    ratio is taken as a finite product.
    """
    _check_degree(n)
    _check_order(nu)
    x, y = _real(x), _real(y)
    dt = np.result_type(x, y)
    terms = (
        _coef((-1) ** k * math.comb(n, k), math.factorial(n), dt)
        * rgamma_ratio(n + nu, k + nu, dt.type)
        * _pow(x, k)
        * _pow(y, n - k)
        for k in range(n + 1)
    )
    return compensated_sum(terms)


def q_poly(n: int, nu: float, x, y):
    """``Q_n^(nu)(x, y) = n! sum_k x**(n-2k) y**k / ((n-2k)! k! Gamma(2k+nu+1))``."""
    _check_degree(n)
    _check_order(nu)
    x, y = _real(x), _real(y)
    terms = (
        float(math.factorial(n) // (math.factorial(n - 2 * k) * math.factorial(k)))
        * reciprocal_gamma(2 * k + nu)
        * _pow(x, n - 2 * k)
        * _pow(y, k)
        for k in range(n // 2 + 1)
    )
    return compensated_sum(terms)


def hermite2_shift_expand(n: int, a, x, y):
    """Right-hand side of ``H_n(x + a, y) = sum_k C(n,k) a**k H_{n-k}(x, y)``."""
    _check_degree(n)
    a = _real(a)
    terms = (math.comb(n, k) * _pow(a, k) * hermite2(n - k, x, y) for k in range(n + 1))
    return compensated_sum(terms)


@dataclass(frozen=True)
class TwoIndexArgs:
    """Argument block ``(x, y; w, z | tau)`` of the two-index families."""

    x: float
    y: float
    w: float
    z: float
    tau: float

    def __post_init__(self):
        for name in ("x", "y", "w", "z", "tau"):
            if not np.all(np.isfinite(getattr(self, name))):
                raise ValueError(f"{name} must be finite")


def hermite_2index(m: int, n: int, args: TwoIndexArgs):
    """Two-index Hermite polynomial ``H_{m,n}(x, y; w, z | tau)``."""
    _check_degree(m, n)
    terms = (
        _two_index_coeff(m, n, k)
        * _pow(args.tau, k)
        * hermite2(m - k, args.x, args.y)
        * hermite2(n - k, args.w, args.z)
        for k in range(min(m, n) + 1)
    )
    return compensated_sum(terms)


def q_2index(m: int, n: int, mu: float, nu: float, args: TwoIndexArgs):
    """Two-index Q polynomial; the orders inside the sum rise with ``k`` as ``k+mu``, ``k+nu``."""
    _check_degree(m, n)
    _check_order(mu, nu)
    terms = (
        _two_index_coeff(m, n, k)
        * _pow(args.tau, k)
        * q_poly(m - k, k + mu, args.x, args.y)
        * q_poly(n - k, k + nu, args.w, args.z)
        for k in range(min(m, n) + 1)
    )
    return compensated_sum(terms)


def t_poly(m: int, n: int, nu: float, args: TwoIndexArgs):
    """Mixed polynomial ``T_{m,n}^(nu)``: a Q factor of rising order times a Hermite factor."""
    _check_degree(m, n)
    _check_order(nu)
    terms = (
        _two_index_coeff(m, n, k)
        * _pow(args.tau, k)
        * q_poly(m - k, k + nu, args.x, args.y)
        * hermite2(n - k, args.w, args.z)
        for k in range(min(m, n) + 1)
    )
    return compensated_sum(terms)


# exact coefficient routes for the operational identity Q = W(y d^2/dx^2) x**n


def q_poly_coefficients(n: int, nu: int) -> dict[tuple[int, int], Fraction]:
    """Exact coefficients ``{(x_power, y_power): c}`` of ``Q_n^(nu)`` from the explicit sum."""
    _check_degree(n)
    if int(nu) != nu or nu < 0:
        raise ValueError("exact coefficients need a non-negative integer order")
    return {
        (n - 2 * k, k): Fraction(
            math.factorial(n), math.factorial(n - 2 * k) * math.factorial(k) * math.factorial(2 * k + nu)
        )
        for k in range(n // 2 + 1)
    }


def _differentiate(coeffs: list[Fraction]) -> list[Fraction]:
    return [coeffs[p] * p for p in range(1, len(coeffs))]


def q_poly_operational(n: int, nu: int) -> dict[tuple[int, int], Fraction]:
    """Exact coefficients of ``W_nu(y D**2 | 2) x**n`` by repeated differentiation of ``x**n``.

    ``W_nu(s | 2) = sum_k s**k / (k! (2k+nu)!)``, so the ``y**k`` coefficient is
    ``D**(2k) x**n / (k! (2k+nu)!)``.
    """
    _check_degree(n)
    if int(nu) != nu or nu < 0:
        raise ValueError("exact coefficients need a non-negative integer order")
    out: dict[tuple[int, int], Fraction] = {}
    poly = [Fraction(0)] * n + [Fraction(1)]
    k = 0
    while poly and any(poly):
        scale = Fraction(1, math.factorial(k) * math.factorial(2 * k + nu))
        for p, c in enumerate(poly):
            if c:
                out[(p, k)] = c * scale
        poly = _differentiate(_differentiate(poly))
        k += 1
    return out


def generating_function_deviation(family: str, n_max: int, t, x, y, nu: float = 0.0) -> float:
    """Largest ``|sum_{n<=N} t**n/n! P_n(x, y) - G(t; x, y)|`` over the broadcast grid.

    ``family="hermite"`` compares against ``exp(x t + y t**2)``;
    ``family="q"`` against ``exp(x t) W_nu(y t**2 | 2)``.
    """
    _check_degree(n_max)
    t, x, y = np.broadcast_arrays(_real(t), _real(x), _real(y))
    if family == "hermite":
        partial = compensated_sum(t**n / math.factorial(n) * hermite2(n, x, y) for n in range(n_max + 1))
        closed = np.exp(x * t + y * t * t)
    elif family == "q":
        _check_order(nu)
        partial = compensated_sum(t**n / math.factorial(n) * q_poly(n, nu, x, y) for n in range(n_max + 1))
        closed = np.exp(x * t) * wright2(nu, y * t * t)
    else:
        raise ValueError(f"unknown generating-function family {family!r}")
    return float(np.max(np.abs(np.asarray(partial) - closed)))


_FAMILY_ARITY: Mapping[str, tuple[tuple[str, ...], tuple[str, ...]]] = {
    # family -> (indices, reals)
    "hermite2": (("n",), ("x", "y")),
    "laguerre2": (("n",), ("x", "y")),
    "laguerre-assoc": (("n",), ("nu", "x", "y")),
    "q": (("n",), ("nu", "x", "y")),
    "hermite-2index": (("m", "n"), ("x", "y", "w", "z", "tau")),
    "q-2index": (("m", "n"), ("mu", "nu", "x", "y", "w", "z", "tau")),
    "t": (("m", "n"), ("nu", "x", "y", "w", "z", "tau")),
}


@dataclass(frozen=True)
class PolyEval:
    """A uniform evaluation request for one polynomial family.

    >>> PolyEval("laguerre2", {"n": 2}, {"x": 1.0, "y": 1.0}).evaluate()
    -0.5
    """

    family: str
    index: Mapping[str, int]
    args: Mapping[str, float] = field(default_factory=dict)

    FAMILIES = tuple(_FAMILY_ARITY)

    def __post_init__(self):
        if self.family not in _FAMILY_ARITY:
            raise ValueError(f"unknown polynomial family {self.family!r}")
        idx_names, real_names = _FAMILY_ARITY[self.family]
        if set(self.index) != set(idx_names):
            raise ValueError(f"{self.family} takes indices {idx_names}, got {tuple(self.index)}")
        missing = set(real_names) - set(self.args) - {"mu", "nu"}
        extra = set(self.args) - set(real_names)
        if missing or extra:
            raise ValueError(f"{self.family} takes arguments {real_names}")

    def evaluate(self) -> float:
        i, a = dict(self.index), dict(self.args)
        mu, nu = a.get("mu", 0.0), a.get("nu", 0.0)
        fam = self.family
        if fam == "hermite2":
            return hermite2(i["n"], a["x"], a["y"])
        if fam == "laguerre2":
            return laguerre2(i["n"], a["x"], a["y"])
        if fam == "laguerre-assoc":
            return laguerre_assoc(i["n"], nu, a["x"], a["y"])
        if fam == "q":
            return q_poly(i["n"], nu, a["x"], a["y"])
        block = TwoIndexArgs(a["x"], a["y"], a["w"], a["z"], a["tau"])
        if fam == "hermite-2index":
            return hermite_2index(i["m"], i["n"], block)
        if fam == "q-2index":
            return q_2index(i["m"], i["n"], mu, nu, block)
        return t_poly(i["m"], i["n"], nu, block)
