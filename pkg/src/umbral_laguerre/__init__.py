"""Umbral closed forms for integrals of Laguerre polynomials, with exact and numerical checks."""
from .integrals import (
    ClosedFormResult,
    GaussianParams,
    IntegralParams,
    evaluate,
    laguerre_assoc_gaussian,
    laguerre_bessel_gaussian,
    laguerre_gaussian,
    laguerre_hermite_gaussian,
    laguerre_product_gaussian,
    laguerre_shifted_gaussian,
    master_gaussian,
)
from .oracle import OracleResult, QuadratureSpec, integrand_builder, integrate_gaussian_weighted
from .poly import (
    PolyEval,
    TwoIndexArgs,
    hermite2,
    hermite2_shift_expand,
    hermite_2index,
    laguerre2,
    laguerre_assoc,
    q_2index,
    q_poly,
    t_poly,
)
from .report import VerificationReport, verify_point
from .special import DomainError, bessel_tricomi0, classical_laguerre, reciprocal_gamma, wright2

__version__ = "0.1.0"
