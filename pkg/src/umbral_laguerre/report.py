"""Closed form versus quadrature, one grid point at a time."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .integrals import IntegralParams, evaluate
from .oracle import OracleResult, QuadratureSpec, integrand_builder, integrate_gaussian_weighted

__all__ = ["VerificationReport", "verify_point", "CSV_HEADER", "ZERO_THRESHOLD", "ABS_TOL"]

# below this |oracle| the comparison is absolute; odd integrands vanish exactly
ZERO_THRESHOLD = 1e-12
ABS_TOL = 1e-11

CSV_HEADER = (
    "formula_id",
    "params",
    "prefactor_convention",
    "closed_form",
    "oracle",
    "abs_err",
    "rel_err",
    "oracle_est_error",
    "oracle_orders_used",
    "oracle_converged",
    "cancellation_magnitude",
    "catastrophic_cancellation",
    "pass",
)


def _finite(x):
    # JSON has no inf/nan
    if isinstance(x, float) and not math.isfinite(x):
        return None
    return x


@dataclass(frozen=True)
class VerificationReport:
    formula_id: str
    params: dict
    prefactor_convention: str | None
    closed_form: float
    oracle: float
    abs_err: float
    rel_err: float | None
    oracle_metadata: OracleResult
    cancellation_magnitude: float
    catastrophic_cancellation: bool
    passed: bool

    def to_dict(self) -> dict:
        meta = self.oracle_metadata
        return {
            "formula_id": self.formula_id,
            "params": dict(self.params),
            "prefactor_convention": self.prefactor_convention,
            "closed_form": _finite(self.closed_form),
            "oracle": _finite(self.oracle),
            "abs_err": _finite(self.abs_err),
            "rel_err": _finite(self.rel_err),
            "oracle_metadata": {
                "value": _finite(meta.value),
                "est_error": _finite(meta.est_error),
                "orders_used": meta.orders_used,
                "converged": meta.converged,
            },
            "cancellation_magnitude": _finite(self.cancellation_magnitude),
            "catastrophic_cancellation": self.catastrophic_cancellation,
            "pass": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)

    def to_csv_row(self) -> list[str]:
        d = self.to_dict()
        meta = d.pop("oracle_metadata")

        def cell(v):
            if v is None:
                return ""
            if isinstance(v, bool):
                return "true" if v else "false"
            return repr(v) if isinstance(v, float) else str(v)

        params = ";".join(f"{k}={v!r}" for k, v in self.params.items())
        return [
            d["formula_id"],
            params,
            cell(d["prefactor_convention"]),
            cell(d["closed_form"]),
            cell(d["oracle"]),
            cell(d["abs_err"]),
            cell(d["rel_err"]),
            cell(meta["est_error"]),
            cell(meta["orders_used"]),
            cell(meta["converged"]),
            cell(d["cancellation_magnitude"]),
            cell(d["catastrophic_cancellation"]),
            cell(d["pass"]),
        ]


def verify_point(
    formula_id: str,
    params: IntegralParams,
    rel_tol: float = 1e-9,
    convention: str = "m",
    spec: QuadratureSpec | None = None,
    abs_tol: float = ABS_TOL,
) -> VerificationReport:
    """Compare the closed form for one parameter set against the quadrature oracle.

    Passes when the oracle converged and the relative error is within
    ``rel_tol``; when ``|oracle| < 1e-12`` the absolute error is held to
    ``abs_tol`` instead.
    """
    closed = evaluate(formula_id, params, convention)
    oracle = integrate_gaussian_weighted(integrand_builder(formula_id, params), params.alpha, spec)
    abs_err = abs(closed.value - oracle.value)
    if abs(oracle.value) < ZERO_THRESHOLD:
        rel_err = None
        ok = abs_err <= abs_tol
    else:
        rel_err = abs_err / abs(oracle.value)
        ok = rel_err <= rel_tol
    return VerificationReport(
        formula_id=formula_id,
        params=params.subset(formula_id),
        prefactor_convention=convention if formula_id == "laguerre-hermite-gaussian" else None,
        closed_form=closed.value,
        oracle=oracle.value,
        abs_err=abs_err,
        rel_err=rel_err,
        oracle_metadata=oracle,
        cancellation_magnitude=closed.cancellation_magnitude,
        catastrophic_cancellation=closed.catastrophic,
        passed=bool(ok and oracle.converged),
    )

