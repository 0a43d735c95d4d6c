"""
Report Evaluator - turns an exact difference into a CheckReport.

Statuses:
1. "pass"        - gating instance, difference is exactly zero
2. "fail"        - gating instance, difference is non-zero (witness attached)
                   or computation raised
3. "report_only" - exploratory instance outside the proved range; the
                   difference (or the exception) is attached as witness
                   whatever its value

Whether an instance is gating comes from the router's label on its task.
"""

import logging
from fractions import Fraction
from typing import Any, Dict, Optional, Union

from symcheck.models.schemas import CheckReport
from symcheck.poly.exact_poly import ExactPoly

logger = logging.getLogger(__name__)

Difference = Union[ExactPoly, int, Fraction]


def render_param(value: Any) -> str:
    """Partitions and index tuples as [a,b], everything else via str."""
    if isinstance(value, tuple):
        return "[" + ",".join(str(v) for v in value) + "]"
    return str(value)


def render_params(params: Dict[str, Any]) -> Dict[str, str]:
    return {name: render_param(value) for name, value in params.items()}


def is_zero(difference: Difference) -> bool:
    if isinstance(difference, ExactPoly):
        return difference.is_zero()
    return difference == 0


def make_report(
    check: str,
    params: Dict[str, Any],
    difference: Difference,
    gating: bool = True,
    label: Optional[str] = None,
) -> CheckReport:
    """
    Evaluate a difference LHS - RHS.

    Args:
        check: check identifier
        params: typed parameters, rendered into the report
        difference: exact LHS - RHS (polynomial or number)
        gating: False for exploratory instances (status report_only)
        label: optional prefix for the witness, e.g. the failing sub-instance

    Returns:
        CheckReport with status pass, fail or report_only
    """
    zero = is_zero(difference)
    witness = None
    if not gating:
        status = "report_only"
        witness = str(difference)
    elif zero:
        status = "pass"
    else:
        status = "fail"
        witness = str(difference)
        logger.warning(f"{check} failed at {render_params(params)}")
    if witness is not None and label:
        witness = f"{label}: {witness}"
    return CheckReport(check=check, params=render_params(params), status=status, witness=witness)


def mark_exploratory(report: CheckReport) -> CheckReport:
    """Re-label an evaluated report as report_only, keeping its witness ('0' for a pass)."""
    witness = report.witness if report.witness is not None else "0"
    return report.model_copy(update={"status": "report_only", "witness": witness})


def crashed_report(check: str, params: Dict[str, Any], error: Exception, gating: bool = True) -> CheckReport:
    """A check that raised carries the exception; it fails only when gating."""
    logger.error(f"{check} raised at {render_params(params)}: {type(error).__name__}: {error}")
    return CheckReport(
        check=check,
        params=render_params(params),
        status="fail" if gating else "report_only",
        witness=f"error: {type(error).__name__}: {error}",
    )
