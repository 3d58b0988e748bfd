"""
A Laguerre-Bessel integral
==========================

The integrand L_n(x, y) J0(2 sqrt(x)) exp(-alpha x**2) runs over the whole
line. For negative x the Bessel factor continues to I0(2 sqrt(-x)), which
grows, but the Gaussian still wins.
"""

import math

import numpy as np

from umbral_laguerre import bessel_tricomi0, laguerre_bessel_gaussian, verify_point, wright2
from umbral_laguerre.integrals import IntegralParams

# The Tricomi series on both sides of zero
xs = np.array([-4.0, -1.0, 0.0, 1.0, 4.0])
print(bessel_tricomi0(xs))

# n = 0 is a single Bessel-Wright value
alpha = 1.0
print(laguerre_bessel_gaussian(0, 1.0, alpha), math.sqrt(math.pi / alpha) * wright2(0, 1 / (4 * alpha)))

###############################################################################
# The closed form is a double sum that stays regular at y = 0
for n in range(7):
    r = verify_point("laguerre-bessel", IntegralParams(n=n, y=0.0, alpha=0.5), rel_tol=1e-8)
    print(f"n={n}  closed={r.closed_form: .12e}  oracle={r.oracle: .12e}  pass={r.passed}")
