"""
Exact umbral reductions
=======================

The umbral operator c acts on a vacuum phi_0 by c**g phi_0 = 1/Gamma(g + 1).
Expanding a polynomial in c and then reducing reproduces Laguerre-type sums,
and here the whole computation is done in exact rational arithmetic.
"""

from fractions import Fraction

from umbral_laguerre import umbral

# (y - c x)**2 acting on the vacuum
expr = umbral.expand_binomial_power("y", "x", 2)
print(umbral.vacuum_reduce(expr).dump())

# The same sum written out term by term
print(umbral.laguerre_reference(2).dump())

###############################################################################
# Certification compares the two sides exactly, with no tolerance.
for n in (0, 5, 10, 20):
    print(n, umbral.certify_laguerre(n))

###############################################################################
# Fractional orders keep their Gamma factors symbolic.
half = Fraction(1, 2)
print(umbral.q_from_hermite(2, half).dump())
print(umbral.certify_q_from_hermite(2, half))

# The second umbral operator d builds the Bessel-Wright series
print(umbral.wright_from_umbral(1, 3).dump())
print(umbral.certify_wright_reduction(1, 3))

###############################################################################
# Ring arithmetic on expressions is exact and canonical.
c, x = umbral.UmbralExpr.c(1), umbral.UmbralExpr.var("x")
print((c * x + 1) ** 2 == c**2 * x**2 + 2 * c * x + 1)
