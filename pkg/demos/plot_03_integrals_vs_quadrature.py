"""
Closed forms against quadrature
===============================

Each closed form is checked against an independent Gauss-Hermite oracle that
only ever sees the integrand.
"""

import math

from umbral_laguerre import (
    IntegralParams,
    integrand_builder,
    integrate_gaussian_weighted,
    laguerre_gaussian,
    laguerre_product_gaussian,
    master_gaussian,
    verify_point,
)

# The simplest case: int L_2(x, 1) exp(-x**2) dx = 1.25 sqrt(pi)
print(laguerre_gaussian(2, 1.0, 1.0), 1.25 * math.sqrt(math.pi))

# The oracle on its own
params = IntegralParams(n=2, u=1.0, alpha=1.0)
result = integrate_gaussian_weighted(integrand_builder("laguerre-gaussian", params), params.alpha)
print(result)

###############################################################################
# A tilted Gaussian moment
print(master_gaussian(4, 1.0, 0.5, 0.7, 1.0))

###############################################################################
# verify_point bundles both sides into a report
report = verify_point("laguerre-product-gaussian", IntegralParams(m=4, n=3, mu=0.5, nu=2.5, u=-2.0, v=3.0, alpha=0.5))
print(report.to_json())

# Cancellation diagnostics: sum |term| / |value|
print(report.cancellation_magnitude, report.catastrophic_cancellation)

# Swapping the two factors leaves the value unchanged, bit for bit
a = laguerre_product_gaussian(4, 3, 0.5, 2.5, -2.0, 3.0, 0.5)
b = laguerre_product_gaussian(3, 4, 2.5, 0.5, 3.0, -2.0, 0.5)
print(a == b)
