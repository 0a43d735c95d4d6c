"""
Check Executor - runs tasks, orders the reports and renders the stream.

Tasks are independent and arrive in canonical order; with workers > 1 they
go through a process pool whose map keeps that order, so the stream is the
same for any worker count.
"""

import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, List, Optional, TextIO, Tuple

from symcheck.engine.conjecture import (
    check_ebasis_forms,
    check_main_conjecture,
    check_special_case_n1,
    check_special_case_n2_row,
)
from symcheck.engine.lemmas import (
    check_alternating_convolution,
    check_binomial,
    check_doubled_substitution,
    check_er_formula,
    check_kostka_round_trip,
    check_qxx_lemma,
)
from symcheck.engine.length_two import (
    check_inverse_kostka_identity,
    check_n2_coefficient_identity,
    check_q_expression,
)
from symcheck.engine.series import check_cauchy, check_defining_relation, check_phi
from symcheck.evaluator.evaluator import crashed_report, mark_exploratory
from symcheck.models.schemas import CheckReport, SuiteConfig, SummaryRecord
from symcheck.router.classifier import Task, build_tasks

logger = logging.getLogger(__name__)

CHECKS: Dict[str, Callable[..., CheckReport]] = {
    "main_conjecture": check_main_conjecture,
    "special_case_n1": check_special_case_n1,
    "special_case_n2_row": check_special_case_n2_row,
    "ebasis_forms": check_ebasis_forms,
    "qxx_lemma": check_qxx_lemma,
    "alternating_convolution": check_alternating_convolution,
    "doubled_substitution": check_doubled_substitution,
    "binomial_lemma": check_binomial,
    "er_formula": check_er_formula,
    "kostka_round_trip": check_kostka_round_trip,
    "inverse_kostka_identity": check_inverse_kostka_identity,
    "cauchy": check_cauchy,
    "phi": check_phi,
    "defining_relation": check_defining_relation,
    "n2_coefficient_identity": check_n2_coefficient_identity,
    "q_expression": check_q_expression,
}

# keyword -> report parameter name, where they differ
PARAM_NAMES = {"lam": "lambda", "max_degree": "D", "identity_name": "identity"}


def report_params(kwargs: Dict) -> Dict:
    return {PARAM_NAMES.get(name, name): value for name, value in kwargs.items()}


def run_task(task: Task) -> CheckReport:
    """
    Run one check under the task's routing label.

    An exception becomes a report instead of propagating: a failure for
    gating tasks, report_only for exploratory ones.
    """
    start = time.perf_counter()
    try:
        report = CHECKS[task.check](**task.kwargs)
        if not task.gating:
            report = mark_exploratory(report)
    except Exception as e:
        report = crashed_report(task.check, report_params(task.kwargs), e, gating=task.gating)
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    return report.model_copy(update={"elapsed_ms": elapsed_ms})


def execute(tasks: List[Task], workers: int) -> List[CheckReport]:
    """Reports in task order."""
    if workers > 1 and len(tasks) > 1:
        logger.info(f"Starting worker pool with {workers} processes for {len(tasks)} tasks")
        chunksize = max(1, len(tasks) // (workers * 8))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(run_task, tasks, chunksize=chunksize))
    return [run_task(task) for task in tasks]


def summarize(reports: List[CheckReport], wall_ms: int, timings: bool) -> SummaryRecord:
    failed = sum(1 for r in reports if r.status == "fail")
    return SummaryRecord(
        total=len(reports),
        passed=sum(1 for r in reports if r.status == "pass"),
        failed=failed,
        report_only=sum(1 for r in reports if r.status == "report_only"),
        exit_code=1 if failed else 0,
        wall_ms=wall_ms if timings else None,
    )


def render_text(reports: List[CheckReport], summary: SummaryRecord) -> List[str]:
    lines = []
    for report in reports:
        params = " ".join(f"{k}={v}" for k, v in report.params.items())
        timing = f"  ({report.elapsed_ms} ms)" if report.elapsed_ms is not None else ""
        lines.append(f"{report.status.upper():<12} {report.check}  {params}{timing}")
        if report.witness is not None:
            lines.append(f"    witness: {report.witness}")
    lines.append("=" * 70)
    lines.append(
        f"  TOTAL: {summary.total}   PASSED: {summary.passed}   FAILED: {summary.failed}   "
        f"REPORT_ONLY: {summary.report_only}"
    )
    if summary.wall_ms is not None:
        lines.append(f"  WALL TIME: {summary.wall_ms} ms")
    lines.append(f"  {'✅ ALL GATING CHECKS PASSED' if summary.exit_code == 0 else '❌ GATING FAILURES'}")
    lines.append("=" * 70)
    return lines


def render_json(reports: List[CheckReport], summary: SummaryRecord) -> List[str]:
    lines = [report.model_dump_json(exclude_none=True) for report in reports]
    lines.append(summary.model_dump_json(exclude_none=True))
    return lines


def run_verify(config: SuiteConfig, out: Optional[TextIO] = None) -> Tuple[int, List[str]]:
    """
    Execute the selected suites and write the report stream.

    Returns:
        (exit code, rendered lines): 0 when no report failed, 1 otherwise
    """
    out = out or sys.stdout
    start = time.perf_counter()
    tasks = build_tasks(config)
    reports = execute(tasks, config.workers)
    wall_ms = int((time.perf_counter() - start) * 1000)
    if not config.timings:
        reports = [r.model_copy(update={"elapsed_ms": None}) for r in reports]

    summary = summarize(reports, wall_ms, config.timings)
    render = render_json if config.format == "json" else render_text
    lines = render(reports, summary)
    for line in lines:
        out.write(line + "\n")
    logger.info(
        f"Verification finished: {summary.passed} passed, {summary.failed} failed, "
        f"{summary.report_only} report-only in {wall_ms} ms"
    )
    return summary.exit_code, lines
