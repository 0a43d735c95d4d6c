"""
Conjecture Engine - f_lambda / g_lambda, the main conjecture and its
equivalent forms.

Variants:
  even   f_lam = sum c^lam_(mu,nu) S_(2mu+Delta) S_(2nu+Delta)   vs 2^-n Q_(2lam+2Delta)(x,x)
  odd    g_lam = sum c^lam_(mu,nu) S_(2mu+delta) S_(2nu+Delta)   vs 2^-n Q_(2lam+Delta+delta)(x,x)

The checks only evaluate differences; the router decides which instances gate.
"""

import logging
from functools import lru_cache
from typing import Dict, List, Tuple

from symcheck.bases.classical import expand_in_basis_over, schur
from symcheck.bases.kostka import inverse_kostka
from symcheck.bases.littlewood import lr_coefficients
from symcheck.combinat.partitions import (
    PartitionError,
    PartitionSeq,
    conjugate,
    contains,
    enumerate_A_window,
    enumerate_partitions,
    make_partition,
    render,
    scale_add,
    sort_with_sign,
    splits,
    staircase,
)
from symcheck.evaluator.evaluator import make_report
from symcheck.models.schemas import CheckReport
from symcheck.poly.exact_poly import ExactPoly, VariableSpace, move_block
from symcheck.qfunctions.q_series import power_of_two, q_r, schur_2reduced, schur_q

logger = logging.getLogger(__name__)

VARIANTS = ("even", "odd")


def _check_variant(variant: str) -> None:
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant '{variant}' (expected one of {VARIANTS})")


@lru_cache(maxsize=None)
def f_g_poly(lam: PartitionSeq, n: int, variant: str) -> ExactPoly:
    """
    f_lam (variant 'even') or g_lam (variant 'odd') in x1..xn.

    Raises:
        PartitionError: l(lam) > n.
    """
    _check_variant(variant)
    lam = make_partition(lam)
    if len(lam) > n:
        raise PartitionError(f"f/g needs l(lambda) <= {n}, got {render(lam)}")
    big = staircase(n, "big")
    left_shift = big if variant == "even" else staircase(n, "small")
    total = ExactPoly.zero(VariableSpace(n))
    w = sum(lam)
    for a in range(w + 1):
        for mu in enumerate_partitions(a, max_length=n):
            if not contains(lam, mu):
                continue
            for nu in enumerate_partitions(w - a, max_length=n):
                if not contains(lam, nu):
                    continue
                c = lr_coefficients(mu, nu, n).get(lam, 0)
                if c:
                    left = schur_2reduced(scale_add(mu, 2, left_shift, n), n)
                    right = schur_2reduced(scale_add(nu, 2, big, n), n)
                    total = total + (left * right) * c
    return total


def q_target_shape(lam: PartitionSeq, n: int, variant: str) -> PartitionSeq:
    """2lam + 2Delta (even) or 2lam + Delta + delta (odd)."""
    _check_variant(variant)
    big = staircase(n, "big")
    if variant == "even":
        shift = tuple(2 * p for p in big)
    else:
        shift = tuple(2 * p - 1 for p in big)
    return scale_add(lam, 2, shift, n)


@lru_cache(maxsize=None)
def q_target(lam: PartitionSeq, n: int, variant: str) -> ExactPoly:
    """2^-n Q_(target shape)(x,x)."""
    return schur_q(q_target_shape(lam, n, variant), n, "doubled") * power_of_two(-n)


def check_main_conjecture(lam: PartitionSeq, n: int, variant: str) -> CheckReport:
    difference = f_g_poly(lam, n, variant) - q_target(lam, n, variant)
    params = {"n": n, "lambda": lam, "variant": variant}
    return make_report("main_conjecture", params, difference)


def check_special_case_n1(k: int, variant: str) -> CheckReport:
    """
    One variable, lam = (k):
      even  sum_j q_(2j+1) q_(2(k-j)+1) = 1/2 q_(2k+2)(x,x)
      odd   sum_j q_(2j) q_(2(k-j)+1)   = 1/2 q_(2k+1)(x,x)
    """
    _check_variant(variant)
    offset = 1 if variant == "even" else 0
    lhs = ExactPoly.zero(VariableSpace(1))
    for j in range(k + 1):
        lhs = lhs + q_r(2 * j + offset, 1) * q_r(2 * (k - j) + 1, 1)
    rhs = q_r(2 * k + 1 + offset, 1, "doubled") * power_of_two(-1)
    return make_report("special_case_n1", {"k": k, "variant": variant}, lhs - rhs)


def check_special_case_n2_row(k: int, variant: str) -> CheckReport:
    """
    Two variables, lam = (k):
      even  sum_j S_(2j+2,1) S_(2(k-j)+2,1) = 1/4 (q_(2k+4) q_2 - 2 q_(2k+5) q_1 + 2 q_(2k+6))(x,x)
      odd   sum_j S_(2j+1) S_(2(k-j)+2,1)   = 1/4 (q_(2k+3) q_1 - 2 q_(2k+4))(x,x)
    """
    _check_variant(variant)
    n = 2
    lhs = ExactPoly.zero(VariableSpace(n))
    for j in range(k + 1):
        left = (2 * j + 2, 1) if variant == "even" else (2 * j + 1,)
        lhs = lhs + schur_2reduced(left, n) * schur_2reduced((2 * (k - j) + 2, 1), n)

    def qd(r: int) -> ExactPoly:
        return q_r(r, n, "doubled")

    if variant == "even":
        rhs = qd(2 * k + 4) * qd(2) - (qd(2 * k + 5) * qd(1)) * 2 + qd(2 * k + 6) * 2
    else:
        rhs = qd(2 * k + 3) * qd(1) - qd(2 * k + 4) * 2
    rhs = rhs * power_of_two(-2)
    return make_report("special_case_n2_row", {"k": k, "variant": variant}, lhs - rhs)


def _side_product(u: Tuple[int, ...], n: int, shift: int) -> ExactPoly:
    """prod_j q_(2u_j + shift - (n-j)), zero as soon as a subscript is negative."""
    product = ExactPoly.one(VariableSpace(n))
    for j, value in enumerate(u, start=1):
        r = 2 * value + shift - (n - j)
        if r < 0:
            return ExactPoly.zero(VariableSpace(n))
        product = product * q_r(r, n)
    return product


@lru_cache(maxsize=None)
def a_window_side(eta: PartitionSeq, n: int, shift: int) -> ExactPoly:
    """
    sum over u in A_n with |u| - n(n-1)/2 = |eta| of
    sgn(tau_u) prod_j q_(2u_j + shift - (n-j)) K^-1_(eta, (tau_u^-1 u - delta)').
    Other members of A_n only meet inverse-Kostka entries of mismatched weight.
    """
    delta = staircase(n, "small") + (0,)
    total = ExactPoly.zero(VariableSpace(n))
    for u in enumerate_A_window(n, sum(eta) + n * (n - 1) // 2):
        ordered, sign = sort_with_sign(u)
        shape = make_partition(a - d for a, d in zip(ordered, delta))
        coefficient = inverse_kostka(eta, conjugate(shape))
        if coefficient:
            total = total + _side_product(u, n, shift) * (sign * coefficient)
    return total


def ebasis_lhs(xi: PartitionSeq, n: int, variant: str) -> ExactPoly:
    """Coefficient of e_xi(y^2) in the A_n-indexed form of sum_lam s_lam(y^2) f_lam or g_lam."""
    _check_variant(variant)
    u_shift = 1 if variant == "even" else 0
    total = ExactPoly.zero(VariableSpace(n))
    for eta, zeta in splits(xi):
        total = total + a_window_side(eta, n, u_shift) * a_window_side(zeta, n, 1)
    return total


def ebasis_rhs(xi: PartitionSeq, n: int, variant: str) -> ExactPoly:
    """sum over lam in P^(n), |lam| = |xi|, of 2^-n K^-1_(xi, lam') Q_(target)(x,x)."""
    total = ExactPoly.zero(VariableSpace(n))
    for lam in enumerate_partitions(sum(xi), max_length=n):
        coefficient = inverse_kostka(xi, conjugate(lam))
        if coefficient:
            total = total + q_target(lam, n, variant) * coefficient
    return total


def ebasis_expansion(weight: int, n: int, variant: str) -> Dict[PartitionSeq, ExactPoly]:
    """e-basis (in y) coefficients of sum over |lam| = weight of s_lam(y) f_lam or g_lam."""
    space = VariableSpace(n)
    total = ExactPoly.zero(space)
    for lam in enumerate_partitions(weight, max_length=n):
        total = total + move_block(schur(lam, n), "x", "y") * f_g_poly(lam, n, variant)
    return expand_in_basis_over(total, "elementary", n, "y")


def check_ebasis_forms(n: int, variant: str, max_weight: int) -> CheckReport:
    """
    For each xi with parts <= n and |xi| <= max_weight: the A_n-window left
    coefficient against the e-basis expansion of sum s_lam(y) f_lam, then
    against the inverse-Kostka weighted Q right coefficient.
    """
    if n < 1:
        raise ValueError(f"instance size must be positive, got {n}")
    _check_variant(variant)
    params = {"n": n, "variant": variant, "max_weight": max_weight}
    differences: List[Tuple[str, ExactPoly]] = []
    for w in range(max_weight + 1):
        expansion = ebasis_expansion(w, n, variant)
        for xi in enumerate_partitions(w, max_part=n):
            lhs = ebasis_lhs(xi, n, variant)
            route_gap = lhs - expansion.get(xi, ExactPoly.zero(VariableSpace(n)))
            if not route_gap.is_zero():
                return make_report("ebasis_forms", params, route_gap, label=f"xi={render(xi)} window - expansion")
            differences.append((f"xi={render(xi)}", lhs - ebasis_rhs(xi, n, variant)))
        logger.debug(f"ebasis_forms n={n} {variant}: weight {w} done")
    label, witness = next(((l, d) for l, d in differences if not d.is_zero()), ("all xi", ExactPoly.zero(VariableSpace(n))))
    return make_report("ebasis_forms", params, witness, label=label)
