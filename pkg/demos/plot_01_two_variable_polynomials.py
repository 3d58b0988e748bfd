"""
Two-variable Hermite and Laguerre polynomials
=============================================

A tour of the polynomial evaluators and the identities that tie them together.
"""

import numpy as np

from umbral_laguerre import hermite2, laguerre2, laguerre_assoc, q_poly
from umbral_laguerre.special import classical_laguerre

# H_n(x, 0) is just x**n
print(hermite2(3, 1.5, 0.0), 1.5**3)

# At y = 1 the two-variable Laguerre polynomial is the classical one
x = np.linspace(-2, 4, 7)
for n in range(5):
    gap = np.max(np.abs(laguerre2(n, x, 1.0) - classical_laguerre(n, 0.0, x)))
    print(f"n={n}  max |L_n(x,1) - L_n(x)| = {gap:.1e}")

# Associated version; nu moves the Gamma weights, the degree stays n
print(laguerre_assoc(4, 0.5, x, 1.0))

# Homogeneity: L_n^(nu)(x, y) = y**n L_n^(nu)(x / y)
y = 2.0
print(np.allclose(laguerre_assoc(4, 0.5, x, y), y**4 * classical_laguerre(4, 0.5, x / y)))

# The Q polynomials mix Hermite-style powers with Gamma weights
grid = np.linspace(-1, 1, 5)
print(q_poly(3, 1.0, grid, 0.25))

# Evaluators broadcast and keep the input precision
nodes = np.linspace(-1, 1, 3, dtype=np.longdouble)
print(hermite2(4, nodes, 0.5).dtype)
