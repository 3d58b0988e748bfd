"""
Which Gamma prefactor?
======================

The Laguerre x Hermite integral carries a Gamma(k + nu + 1)/k! prefactor, and
k could be read either as the Laguerre degree m or the Hermite degree n. The
two readings agree when m == n, so asymmetric cases settle it.
"""

import itertools

from umbral_laguerre import verify_point
from umbral_laguerre.integrals import IntegralParams

grid = [
    IntegralParams(m=m, n=n, nu=nu, y=1.0, f=f, g=0.5, z=-0.5, alpha=1.0)
    for m, n, nu, f in itertools.product(range(5), range(5), (0.5, 2.5), (-2.0, 1.0))
]

for convention in ("m", "n"):
    reports = [verify_point("laguerre-hermite-gaussian", p, convention=convention) for p in grid]
    failed = sum(not r.passed for r in reports)
    print(f"convention {convention}: {failed} of {len(reports)} points fail")

###############################################################################
# The Laguerre-degree reading matches quadrature everywhere; it is the default.
