"""Exact umbral reduction over rational coefficients.

Expressions are polynomials in named formal variables and in two commuting
umbral symbols, ``c`` (acting on the vacuum phi_0) and ``d`` (acting on
lambda_0). Reduction replaces ``c**g`` and ``d**g`` by ``1/Gamma(g+1)``:
exactly ``1/g!`` for integer ``g``, otherwise kept as a symbolic Gamma factor.

>>> print(vacuum_reduce(expand_binomial_power("y", "x", 2)).dump())
y^2 - 2*x*y + (1/2)*x^2
"""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = [
    "UmbralMonomial",
    "UmbralExpr",
    "ReducedSum",
    "expand_binomial_power",
    "vacuum_reduce",
    "laguerre_reference",
    "q_reference",
    "wright_reference",
    "q_from_hermite",
    "wright_from_umbral",
    "certify_laguerre",
    "certify_q_from_hermite",
    "certify_wright_reduction",
]

Rational = Union[int, Fraction]
VarPowers = tuple[tuple[str, int], ...]


def _var_key(powers: Mapping[str, int]) -> VarPowers:
    return tuple(sorted((v, int(p)) for v, p in powers.items() if p))


def _merge_vars(a: VarPowers, b: VarPowers) -> VarPowers:
    out = dict(a)
    for v, p in b:
        out[v] = out.get(v, 0) + p
    return _var_key(out)


@dataclass(frozen=True, order=True)
class UmbralMonomial:
    coeff: Fraction
    c_power: Fraction
    d_power: Fraction
    var_powers: VarPowers

    @property
    def key(self):
        return (self.c_power, self.d_power, self.var_powers)


class UmbralExpr:
    """Immutable canonical sum of :class:`UmbralMonomial` terms."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple, Rational] | Iterable[UmbralMonomial] = ()):
        acc: dict[tuple, Fraction] = defaultdict(Fraction)
        items = terms.items() if isinstance(terms, Mapping) else ((t.key, t.coeff) for t in terms)
        for (c, d, vp), coeff in items:
            c, d = Fraction(c), Fraction(d)
            if c < 0 or d < 0:
                raise ValueError("umbral exponents must be non-negative")
            acc[(c, d, _var_key(dict(vp)))] += Fraction(coeff)
        self._terms = tuple(sorted((k, v) for k, v in acc.items() if v != 0))

    @classmethod
    def const(cls, value: Rational = 1) -> "UmbralExpr":
        return cls({(0, 0, ()): value})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "UmbralExpr":
        return cls({(0, 0, ((name, power),)): 1})

    @classmethod
    def c(cls, power: Rational = 1) -> "UmbralExpr":
        return cls({(power, 0, ()): 1})

    @classmethod
    def d(cls, power: Rational = 1) -> "UmbralExpr":
        return cls({(0, power, ()): 1})

    @property
    def monomials(self) -> tuple[UmbralMonomial, ...]:
        return tuple(UmbralMonomial(v, c, d, vp) for (c, d, vp), v in self._terms)

    def canonical(self) -> "UmbralExpr":
        return UmbralExpr(dict(self._terms))

    def _coerce(self, other) -> "UmbralExpr":
        if isinstance(other, UmbralExpr):
            return other
        if isinstance(other, (int, Fraction)):
            return UmbralExpr.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for k, v in other._terms:
            acc[k] = acc.get(k, Fraction(0)) + v
        return UmbralExpr(acc)

    __radd__ = __add__

    def __neg__(self):
        return UmbralExpr({k: -v for k, v in self._terms})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[tuple, Fraction] = defaultdict(Fraction)
        for (c1, d1, v1), a in self._terms:
            for (c2, d2, v2), b in other._terms:
                acc[(c1 + c2, d1 + d2, _merge_vars(v1, v2))] += a * b
        return UmbralExpr(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if int(n) != n or n < 0:
            raise ValueError("only non-negative integer powers are supported")
        out = UmbralExpr.const(1)
        base = self
        n = int(n)
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, UmbralExpr):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __repr__(self):
        return f"UmbralExpr({len(self._terms)} terms)"


def _gamma_factor(g: Fraction) -> tuple[Fraction, tuple[Fraction, ...]]:
    """Split ``1/Gamma(g+1)`` into an exact rational and leftover symbolic Gamma args."""
    if g.denominator == 1:
        return Fraction(1, math.factorial(int(g))), ()
    return Fraction(1), (g,)


@dataclass(frozen=True)
class ReducedSum:
    """Post-vacuum value: rational coefficient, variable powers, symbolic ``1/Gamma(g+1)`` factors.

    ``terms`` is canonical: sorted, merged, zero-free.
    """

    terms: tuple[tuple[Fraction, VarPowers, tuple[Fraction, ...]], ...]

    @classmethod
    def from_terms(cls, raw: Iterable[tuple[Rational, Mapping[str, int] | VarPowers, Iterable[Rational]]]):
        acc: dict[tuple, Fraction] = defaultdict(Fraction)
        for coeff, vp, gammas in raw:
            vp = _var_key(dict(vp))
            coeff = Fraction(coeff)
            leftover: list[Fraction] = []
            for g in gammas:
                exact, sym = _gamma_factor(Fraction(g))
                coeff *= exact
                leftover.extend(sym)
            acc[(vp, tuple(sorted(leftover)))] += coeff
        variables = sorted({v for vp, _ in acc for v, _ in vp})

        def order(item):
            (vp, gammas), _ = item
            powers = dict(vp)
            return tuple(powers.get(v, 0) for v in variables), gammas

        return cls(tuple((c, vp, g) for (vp, g), c in sorted(acc.items(), key=order) if c != 0))

    def evaluate(self, **values: float) -> float:
        out = 0.0
        for coeff, vp, gammas in self.terms:
            term = float(coeff)
            for v, p in vp:
                term *= values[v] ** p
            for g in gammas:
                term /= math.gamma(float(g) + 1.0)
            out += term
        return out

    def dump(self) -> str:
        """Canonical one-line text form, e.g. ``y^2 - 2*x*y + (1/2)*x^2``."""
        if not self.terms:
            return "0"
        parts = []
        for i, (coeff, vp, gammas) in enumerate(self.terms):
            factors = [v if p == 1 else f"{v}^{p}" for v, p in vp]
            mag = abs(coeff)
            if factors and mag == 1:
                body = "*".join(factors)
            else:
                text = str(mag.numerator) if mag.denominator == 1 else f"({mag})"
                body = "*".join([text, *factors])
            body += "".join(f"/Gamma({_fmt_rational(g + 1)})" for g in gammas)
            if i == 0:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(parts)


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else str(q)


def expand_binomial_power(y_sym: str, x_sym: str, n: int) -> UmbralExpr:
    """``(y - c x)**n`` expanded into canonical form."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return (UmbralExpr.var(y_sym) - UmbralExpr.c() * UmbralExpr.var(x_sym)) ** n


def vacuum_reduce(e: UmbralExpr) -> ReducedSum:
    """Apply ``c**g phi_0 -> 1/Gamma(g+1)`` and ``d**g lambda_0 -> 1/Gamma(g+1)`` independently."""
    return ReducedSum.from_terms((m.coeff, m.var_powers, (m.c_power, m.d_power)) for m in e.monomials)


def laguerre_reference(n: int) -> ReducedSum:
    """Explicit two-variable Laguerre sum ``n! sum (-1)^k x^k y^(n-k) / ((n-k)! (k!)^2)``."""
    return ReducedSum.from_terms(
        (
            Fraction((-1) ** k * math.factorial(n), math.factorial(n - k) * math.factorial(k) ** 2),
            {"x": k, "y": n - k},
            (),
        )
        for k in range(n + 1)
    )


def q_reference(n: int, nu: Rational) -> ReducedSum:
    """Explicit Q-polynomial sum with its ``1/Gamma(2k+nu+1)`` factors."""
    return ReducedSum.from_terms(
        (
            Fraction(math.factorial(n), math.factorial(n - 2 * k) * math.factorial(k)),
            {"x": n - 2 * k, "y": k},
            (2 * k + Fraction(nu),),
        )
        for k in range(n // 2 + 1)
    )


def wright_reference(nu: Rational, n_terms: int) -> ReducedSum:
    """First ``n_terms + 1`` terms of ``sum_k x^k / (k! Gamma(2k+nu+1))``."""
    return ReducedSum.from_terms(
        (Fraction(1, math.factorial(k)), {"x": k}, (2 * k + Fraction(nu),)) for k in range(n_terms + 1)
    )


def _hermite_umbral(n: int, x: UmbralExpr, y: UmbralExpr) -> UmbralExpr:
    # H_{k+1} = x H_k + 2 k y H_{k-1}
    prev, cur = UmbralExpr.const(0), UmbralExpr.const(1)
    for k in range(n):
        prev, cur = cur, x * cur + 2 * k * y * prev
    return cur


def certify_laguerre(n: int) -> bool:
    """Exact check that ``(y - c x)^n phi_0`` reduces to the explicit Laguerre sum."""
    return vacuum_reduce(expand_binomial_power("y", "x", n)) == laguerre_reference(n)


def q_from_hermite(n: int, nu: Rational) -> ReducedSum:
    """Reduce ``c^nu H_n(x, y c^2) phi_0``; the Hermite polynomial is built by its recurrence."""
    h = _hermite_umbral(n, UmbralExpr.var("x"), UmbralExpr.var("y") * UmbralExpr.c(2))
    return vacuum_reduce(UmbralExpr.c(Fraction(nu)) * h)


def certify_q_from_hermite(n: int, nu: Rational) -> bool:
    return q_from_hermite(n, nu) == q_reference(n, nu)


def wright_from_umbral(nu: Rational, n_terms: int) -> ReducedSum:
    """Reduce ``d^nu sum_{k<=N} (d^2 x)^k / k!`` against lambda_0."""
    step = UmbralExpr.d(2) * UmbralExpr.var("x")
    series = sum((Fraction(1, math.factorial(k)) * step**k for k in range(n_terms + 1)), UmbralExpr())
    return vacuum_reduce(UmbralExpr.d(Fraction(nu)) * series)


def certify_wright_reduction(nu: Rational, n_terms: int) -> bool:
    return wright_from_umbral(nu, n_terms) == wright_reference(nu, n_terms)
