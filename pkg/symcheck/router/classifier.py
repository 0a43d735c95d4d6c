"""
Check Router - deterministic suite expansion and gating classification.

Expands the selected suites of a SuiteConfig into independent tasks and
classifies each task as "gating" or "exploratory" from its instance size
only:
- main_conjecture and ebasis_forms with n > PROVED_N_MAX are exploratory
- everything else is gating

Flags never change the classification. The label is stamped on each Task
and is the only thing that decides whether a report can fail.
"""

import logging
from typing import Any, Dict, List, NamedTuple, Tuple

from symcheck.combinat.partitions import (
    enumerate_partitions,
    partitions_up_to,
)
from symcheck.config import (
    ALTERNATING_N_MAX,
    ALTERNATING_R_MAX,
    BINOMIAL_SUM_MAX,
    CAUCHY_N,
    DOUBLED_SUBSTITUTION_N_MAX,
    DOUBLED_SUBSTITUTION_R_MAX,
    ER_WEIGHT_MAX,
    EXPLORE_N_MIN,
    INVERSE_KOSTKA_U_MAX,
    LEMMA_N_VALUES,
    LEMMA_U_MAX,
    PROVED_N_MAX,
    Q_EXPRESSION_VARIABLES,
    ROUND_TRIP_WEIGHT_MAX,
)
from symcheck.engine.conjecture import VARIANTS
from symcheck.engine.lemmas import QXX_IDENTITIES
from symcheck.engine.series import SIGNS, defining_relation_base
from symcheck.models.schemas import SuiteConfig

logger = logging.getLogger(__name__)

# Checks whose instances are open beyond the proved range
SIZE_GATED_CHECKS = ("main_conjecture", "ebasis_forms")


class Task(NamedTuple):
    """One check instance; kwargs are passed straight to the check function."""
    suite: str
    check: str
    kwargs: Dict[str, Any]
    gating: bool = True

    def order_key(self) -> Tuple[str, Tuple[Any, ...]]:
        return self.check, tuple(self.kwargs.values())


def classify_check(check: str, params: Dict[str, Any]) -> Dict:
    """
    Classify a check instance as 'gating' or 'exploratory'.

    Returns:
        {
            "classification": "gating" | "exploratory",
            "signals": ["list of triggered signals"]
        }
    """
    signals = []
    n = params.get("n")
    if check in SIZE_GATED_CHECKS and isinstance(n, int) and n > PROVED_N_MAX:
        signals.append(f"open_range (n={n} > {PROVED_N_MAX})")
        return {"classification": "exploratory", "signals": signals}
    if check in SIZE_GATED_CHECKS:
        signals.append(f"proved_range (n={n})")
    else:
        signals.append("proved_identity")
    return {"classification": "gating", "signals": signals}


def _core_tasks(config: SuiteConfig) -> List[Task]:
    tasks = []
    top = min(config.n_max, PROVED_N_MAX)
    for variant in VARIANTS:
        if top >= 1:
            for k in range(config.weight_max + 1):
                lam = (k,) if k else ()
                tasks.append(Task("core", "main_conjecture", {"n": 1, "lam": lam, "variant": variant}))
                tasks.append(Task("core", "special_case_n1", {"k": k, "variant": variant}))
        if top >= 2:
            for lam in partitions_up_to(config.weight_max, max_length=2):
                tasks.append(Task("core", "main_conjecture", {"n": 2, "lam": lam, "variant": variant}))
            for k in range(config.weight_max + 1):
                tasks.append(Task("core", "special_case_n2_row", {"k": k, "variant": variant}))
        for n in range(1, top + 1):
            tasks.append(Task("core", "ebasis_forms", {"n": n, "variant": variant, "max_weight": config.weight_max}))
    return tasks


def _lemma_tasks(config: SuiteConfig) -> List[Task]:
    tasks = []
    for identity_name in QXX_IDENTITIES:
        for u in range(LEMMA_U_MAX + 1):
            for n in LEMMA_N_VALUES:
                tasks.append(Task("lemmas", "qxx_lemma", {"identity_name": identity_name, "u": u, "n": n}))
    for r in range(1, ALTERNATING_R_MAX + 1):
        for n in range(1, ALTERNATING_N_MAX + 1):
            tasks.append(Task("lemmas", "alternating_convolution", {"r": r, "n": n}))
    for r in range(DOUBLED_SUBSTITUTION_R_MAX + 1):
        for n in range(1, DOUBLED_SUBSTITUTION_N_MAX + 1):
            tasks.append(Task("lemmas", "doubled_substitution", {"r": r, "n": n}))
    for total in range(BINOMIAL_SUM_MAX + 1):
        for n in range(total + 1):
            m = total - n
            for k in range(total + 1):
                tasks.append(Task("lemmas", "binomial_lemma", {"n": n, "m": m, "k": k}))
    return tasks


def _kostka_tasks(config: SuiteConfig) -> List[Task]:
    tasks = []
    for w in range(ER_WEIGHT_MAX + 1):
        tasks.append(Task("kostka", "er_formula", {"weight": w}))
    for w in range(ROUND_TRIP_WEIGHT_MAX + 1):
        tasks.append(Task("kostka", "kostka_round_trip", {"weight": w}))
    pairs = [(u1, u2) for u1 in range(1, INVERSE_KOSTKA_U_MAX + 1) for u2 in range(u1)]
    for xi in partitions_up_to(config.weight_max, max_part=2):
        for u in pairs:
            for v in pairs:
                # both sides vanish off this weight
                if sum(u) + sum(v) - 2 == sum(xi):
                    tasks.append(Task("kostka", "inverse_kostka_identity", {"xi": xi, "u": u, "v": v}))
    return tasks


def _phi_tasks(config: SuiteConfig) -> List[Task]:
    tasks = [Task("phi", "cauchy", {"n": CAUCHY_N, "max_degree": config.y_degree_max})]
    for n in range(1, min(config.n_max, PROVED_N_MAX) + 1):
        for sign in SIGNS:
            degree = max(config.y_degree_max, n * (n - 1))
            tasks.append(Task("phi", "phi", {"n": n, "sign": sign, "max_degree": degree}))
        for variant in VARIANTS:
            degree = defining_relation_base(n, variant) + config.y_degree_max
            tasks.append(Task("phi", "defining_relation", {"n": n, "variant": variant, "max_degree": degree}))
    return tasks


def _n2_tasks(config: SuiteConfig) -> List[Task]:
    tasks = []
    for variant in VARIANTS:
        for xi in partitions_up_to(config.weight_max, max_part=2):
            tasks.append(Task("n2", "n2_coefficient_identity", {"xi": xi, "variant": variant}))
        for lam in partitions_up_to(config.weight_max, max_length=2):
            for n in Q_EXPRESSION_VARIABLES:
                tasks.append(Task("n2", "q_expression", {"n": n, "lam": lam, "variant": variant}))
    return tasks


def _explore_tasks(config: SuiteConfig) -> List[Task]:
    tasks = []
    for n in range(EXPLORE_N_MIN, max(config.n_max, EXPLORE_N_MIN) + 1):
        for variant in VARIANTS:
            for w in range(config.weight_max + 1):
                for lam in enumerate_partitions(w, max_length=n):
                    tasks.append(Task("explore", "main_conjecture", {"n": n, "lam": lam, "variant": variant}))
    return tasks


SUITE_BUILDERS = {
    "core": _core_tasks,
    "lemmas": _lemma_tasks,
    "kostka": _kostka_tasks,
    "phi": _phi_tasks,
    "n2": _n2_tasks,
    "explore": _explore_tasks,
}


def route_tasks(tasks: List[Task]) -> List[Task]:
    """Stamp each task with its classification."""
    return [
        task._replace(gating=classify_check(task.check, task.kwargs)["classification"] == "gating")
        for task in tasks
    ]


def build_tasks(config: SuiteConfig) -> List[Task]:
    """Routed tasks of every selected suite, in canonical report order."""
    tasks: List[Task] = []
    for suite in config.suites:
        built = route_tasks(SUITE_BUILDERS[suite](config))
        exploratory = sum(1 for t in built if not t.gating)
        logger.info(f"Suite '{suite}': {len(built)} tasks ({exploratory} exploratory)")
        tasks.extend(built)
    return sorted(tasks, key=Task.order_key)


if __name__ == "__main__":
    demo = SuiteConfig(suites=["core", "explore"], n_max=3, weight_max=2)
    for task in build_tasks(demo):
        signals = classify_check(task.check, task.kwargs)["signals"]
        print(f"\n{task.check} {task.kwargs}")
        print(f"  → {'GATING' if task.gating else 'EXPLORATORY'}")
        print(f"  Signals: {signals}")
