"""
Lemma Checks - the q(x,x) identities, the alternating convolution, doubled
q-series against substitution, the binomial lemma and the inverse-Kostka
formulas.
"""

import logging
from typing import Optional, Tuple

from symcheck.bases.kostka import inverse_kostka, inverse_kostka_block, inverse_kostka_er2, kostka_block
from symcheck.combinat.counting import binom
from symcheck.combinat.partitions import enumerate_partitions, render
from symcheck.evaluator.evaluator import make_report
from symcheck.models.schemas import CheckReport
from symcheck.poly.exact_poly import ExactPoly, VariableSpace, block_bindings
from symcheck.poly.linalg import identity, matmul
from symcheck.qfunctions.q_series import alternating_convolution, q_r

logger = logging.getLogger(__name__)

# q_(2u+2)(x,x) = 2 sum q_(2k) q_(2(u+1-k)), = 2 sum q_(2k+1) q_(2(u-k)+1), q_(2u+1)(x,x) = 2 sum q_(2k+1) q_(2(u-k))
QXX_IDENTITIES = ("even_even", "odd_odd", "odd_even")


def check_qxx_lemma(identity_name: str, u: int, n: int) -> CheckReport:
    if u < 0:
        raise ValueError(f"u must be non-negative, got {u}")
    space = VariableSpace(n)
    if identity_name == "even_even":
        target = q_r(2 * u + 2, n, "doubled")
        pairs = [(2 * k, 2 * (u + 1 - k)) for k in range(u + 2)]
    elif identity_name == "odd_odd":
        target = q_r(2 * u + 2, n, "doubled")
        pairs = [(2 * k + 1, 2 * (u - k) + 1) for k in range(u + 1)]
    elif identity_name == "odd_even":
        target = q_r(2 * u + 1, n, "doubled")
        pairs = [(2 * k + 1, 2 * (u - k)) for k in range(u + 1)]
    else:
        raise ValueError(f"unknown identity '{identity_name}' (expected one of {QXX_IDENTITIES})")
    total = ExactPoly.zero(space)
    for a, b in pairs:
        total = total + q_r(a, n) * q_r(b, n)
    params = {"identity": identity_name, "u": u, "n": n}
    return make_report("qxx_lemma", params, target - total * 2)


def check_alternating_convolution(r: int, n: int) -> CheckReport:
    """sum_s (-1)^s q_s q_(r-s) vanishes for r >= 1."""
    if r < 1:
        raise ValueError(f"r must be at least 1, got {r}")
    return make_report("alternating_convolution", {"r": r, "n": n}, alternating_convolution(r, n))


def check_doubled_substitution(r: int, n: int) -> CheckReport:
    """q_r over x and y with y_i -> x_i equals the convolution q_r(x,x)."""
    space = VariableSpace(n)
    compound = q_r(r, n, "compound")
    bindings = block_bindings(space, "x", space, "x")
    bindings.update(block_bindings(space, "y", space, "x"))
    substituted = compound.substitute(bindings, space)
    return make_report("doubled_substitution", {"r": r, "n": n}, substituted - q_r(r, n, "doubled"))


def binomial_rhs(n: int, m: int, k: int) -> int:
    first = sum(binom(n - k + i, m - i) * binom(k - i, i) for i in range(m + 1))
    second = sum(binom(n - k + i, m - i - 1) * binom(k - i - 1, i) for i in range(m))
    return first + second


def check_binomial(n: int, m: int, k: int) -> CheckReport:
    """
    binom(n, m) against its split at position k.

    Raises:
        ValueError: k outside 0..n+m, or a negative n or m.
    """
    if n < 0 or m < 0:
        raise ValueError(f"n and m must be non-negative, got n={n} m={m}")
    if not 0 <= k <= n + m:
        raise ValueError(f"k must lie in 0..{n + m}, got {k}")
    return make_report("binomial_lemma", {"n": n, "m": m, "k": k}, binom(n, m) - binomial_rhs(n, m, k))


def check_er_formula(weight: int) -> CheckReport:
    """Closed two-column formula against the inverted Kostka block, every pair of weight `weight` with parts <= 2."""
    index = enumerate_partitions(weight, max_part=2)
    mismatch: Optional[Tuple[str, int]] = None
    for lam in index:
        for mu in index:
            gap = inverse_kostka(lam, mu) - inverse_kostka_er2(lam, mu)
            if gap:
                mismatch = (f"lambda={render(lam)} mu={render(mu)}", gap)
                break
        if mismatch:
            break
    label, difference = mismatch or ("", 0)
    logger.debug(f"er_formula weight={weight}: {len(index) ** 2} pairs")
    return make_report("er_formula", {"weight": weight}, difference, label=label or None)


def check_kostka_round_trip(weight: int) -> CheckReport:
    """K * K^-1 = K^-1 * K = I on the full block of one weight."""
    forward = kostka_block(weight, max(weight, 1)).entries
    inverse = inverse_kostka_block(weight, max(weight, 1)).entries
    unit = identity(len(forward))
    for name, product in (("K*K^-1", matmul(forward, inverse)), ("K^-1*K", matmul(inverse, forward))):
        for i, row in enumerate(product):
            for j, value in enumerate(row):
                if value != unit[i][j]:
                    return make_report(
                        "kostka_round_trip", {"weight": weight}, value - unit[i][j], label=f"{name} entry ({i},{j})"
                    )
    return make_report("kostka_round_trip", {"weight": weight}, 0)
