"""
Acceptance Harness

Runs every acceptance criterion at its stated bounds through the same
executor as `symcheck verify`, and prints one banner per criterion with
pass counts and elapsed time against the budget. Exits 1 if any gating
check fails; budget overruns are flagged but do not change the exit code.

    python acceptance_harness.py [--workers N] [--skip-explore]
"""

import argparse
import logging
import sys
import time
from typing import Callable, List, NamedTuple

from symcheck.combinat.partitions import enumerate_partitions, partitions_up_to
from symcheck.config import LOG_FORMAT
from symcheck.engine.conjecture import VARIANTS
from symcheck.engine.lemmas import QXX_IDENTITIES
from symcheck.engine.series import SIGNS, defining_relation_base
from symcheck.router.classifier import Task, route_tasks
from symcheck.runner.executor import execute

logging.basicConfig(level=logging.WARNING, format=LOG_FORMAT)


class Criterion(NamedTuple):
    title: str
    budget_s: float
    build: Callable[[], List[Task]]
    gating: bool = True


def _main_conjecture() -> List[Task]:
    tasks = []
    for variant in VARIANTS:
        for k in range(9):
            tasks.append(Task("core", "main_conjecture", {"n": 1, "lam": (k,) if k else (), "variant": variant}))
        for lam in partitions_up_to(6, max_length=2):
            tasks.append(Task("core", "main_conjecture", {"n": 2, "lam": lam, "variant": variant}))
    return tasks


def _qxx() -> List[Task]:
    return [
        Task("lemmas", "qxx_lemma", {"identity_name": name, "u": u, "n": n})
        for name in QXX_IDENTITIES
        for u in range(11)
        for n in (1, 2, 3)
    ]


def _binomial() -> List[Task]:
    return [
        Task("lemmas", "binomial_lemma", {"n": n, "m": total - n, "k": k})
        for total in range(25)
        for n in range(total + 1)
        for k in range(total + 1)
    ]


def _two_column_formula() -> List[Task]:
    return [Task("kostka", "er_formula", {"weight": w}) for w in range(17)]


def _q_expression() -> List[Task]:
    return [
        Task("n2", "q_expression", {"n": n, "lam": lam, "variant": variant})
        for variant in VARIANTS
        for lam in partitions_up_to(6, max_length=2)
        for n in (2, 3)
    ]


def _inverse_kostka_identity() -> List[Task]:
    pairs = [(u1, u2) for u1 in range(1, 7) for u2 in range(u1)]
    return [
        Task("kostka", "inverse_kostka_identity", {"xi": xi, "u": u, "v": v})
        for xi in partitions_up_to(10, max_part=2)
        for u in pairs
        for v in pairs
        if sum(u) + sum(v) - 2 == sum(xi)
    ]


def _n2_theorem() -> List[Task]:
    return [
        Task("n2", "n2_coefficient_identity", {"xi": xi, "variant": variant})
        for variant in VARIANTS
        for xi in partitions_up_to(8, max_part=2)
    ]


def _phi_and_relations() -> List[Task]:
    tasks = []
    for n in (1, 2):
        for sign in SIGNS:
            tasks.append(Task("phi", "phi", {"n": n, "sign": sign, "max_degree": max(6, n * (n - 1))}))
        for variant in VARIANTS:
            degree = defining_relation_base(n, variant) + 6
            tasks.append(Task("phi", "defining_relation", {"n": n, "variant": variant, "max_degree": degree}))
    return tasks


def _cauchy() -> List[Task]:
    return [Task("phi", "cauchy", {"n": 2, "max_degree": 8})]


def _round_trip() -> List[Task]:
    return [Task("kostka", "kostka_round_trip", {"weight": w}) for w in range(11)]


def _explore() -> List[Task]:
    return [
        Task("explore", "main_conjecture", {"n": 3, "lam": lam, "variant": variant})
        for variant in VARIANTS
        for w in range(5)
        for lam in enumerate_partitions(w, max_length=3)
    ]


CRITERIA = [
    Criterion("Main conjecture, n <= 2", 60, _main_conjecture),
    Criterion("q(x,x) lemma", 10, _qxx),
    Criterion("Binomial lemma", 1, _binomial),
    Criterion("Two-column inverse Kostka formula", 5, _two_column_formula),
    Criterion("Q-expression for length-two shapes", 30, _q_expression),
    Criterion("Inverse-Kostka split identity", 30, _inverse_kostka_identity),
    Criterion("Coefficient-wise n = 2 theorem", 60, _n2_theorem),
    Criterion("Phi expansions and defining relations", 60, _phi_and_relations),
    Criterion("Cauchy-type identity", 10, _cauchy),
    Criterion("Kostka round trip", 10, _round_trip),
    Criterion("Exploration n = 3 (report only)", 600, _explore, gating=False),
]


def run_acceptance(workers: int, skip_explore: bool) -> int:
    print("=" * 70)
    print("🚀 ACCEPTANCE HARNESS")
    print("=" * 70)

    failed_criteria = 0
    for idx, criterion in enumerate(CRITERIA, 1):
        if skip_explore and not criterion.gating:
            continue
        print(f"\nCriterion {idx}: {criterion.title}")
        start = time.perf_counter()
        reports = execute(route_tasks(criterion.build()), workers)
        elapsed = time.perf_counter() - start

        passed = sum(1 for r in reports if r.status == "pass")
        failures = [r for r in reports if r.status == "fail"]
        report_only = sum(1 for r in reports if r.status == "report_only")
        nonzero = sum(1 for r in reports if r.status == "report_only" and r.witness != "0")
        over = "  ⏱️ OVER BUDGET" if elapsed > criterion.budget_s else ""
        print(f"     Instances : {len(reports)}   passed: {passed}   failed: {len(failures)}   report_only: {report_only}")
        print(f"     Time      : {elapsed:.1f}s / {criterion.budget_s:.0f}s{over}")
        if report_only:
            print(f"     Non-zero witnesses : {nonzero}")
        for report in failures[:5]:
            print(f"     ❌ {report.check} {report.params}: {report.witness}")

        if failures:
            failed_criteria += 1
            print("  ❌ FAILED")
        else:
            print("  ✅ PASSED")

    print("\n" + "=" * 70)
    gating_total = sum(1 for c in CRITERIA if c.gating)
    print(f"📊 SUMMARY: {gating_total - failed_criteria}/{gating_total} gating criteria passed.")
    print("=" * 70)
    return 1 if failed_criteria else 0


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Run every acceptance criterion at its stated bounds")
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--skip-explore", action="store_true")
    args = parser.parse_args()
    sys.exit(run_acceptance(args.workers, args.skip_explore))
