"""
Length-Two Identities - the B and C index sets and the identities built on
them for partitions with at most two parts.

S_2 is {"id", "(12)"}; sigma(2) is read as a 0-based position in a pair,
so id picks the second entry and (12) the first.
"""

import logging
from typing import List, Tuple

from symcheck.bases.kostka import inverse_kostka
from symcheck.combinat.partitions import (
    IndexSeq,
    PartitionError,
    PartitionSeq,
    compositions,
    conjugate,
    is_distinct,
    make_partition,
    render,
    scale_add,
    sort_with_sign,
    splits,
)
from symcheck.engine.conjecture import ebasis_rhs
from symcheck.evaluator.evaluator import make_report
from symcheck.models.schemas import CheckReport
from symcheck.poly.exact_poly import ExactPoly, VariableSpace
from symcheck.qfunctions.q_series import q_r, schur_q

logger = logging.getLogger(__name__)

PERMUTATIONS = ("id", "(12)")

PairWindow = List[Tuple[IndexSeq, IndexSeq]]


def second_position(sigma: str) -> int:
    """0-based position of sigma(2)."""
    if sigma == "id":
        return 1
    if sigma == "(12)":
        return 0
    raise ValueError(f"unknown permutation '{sigma}' (expected one of {PERMUTATIONS})")


def sgn(sigma: str) -> int:
    return 1 if second_position(sigma) == 1 else -1


def _length_two(lam: PartitionSeq) -> Tuple[int, int]:
    lam = make_partition(lam)
    if len(lam) > 2:
        raise PartitionError(f"expected at most two parts, got {render(lam)}")
    padded = lam + (0,) * (2 - len(lam))
    return padded[0], padded[1]


def enumerate_B(lam: PartitionSeq, sigma1: str, sigma2: str) -> PairWindow:
    """
    (u, v) in Z>=0^2 x Z>=0^2 with u1+u2+v1+v2 = lam1+lam2+2 and
    u_sigma1(2) + v_sigma2(2) <= lam2, in descending lex order of (u1, u2, v1, v2).
    """
    lam1, lam2 = _length_two(lam)
    i, j = second_position(sigma1), second_position(sigma2)
    window = []
    for entry in compositions(lam1 + lam2 + 2, 4):
        u, v = entry[:2], entry[2:]
        if u[i] + v[j] <= lam2:
            window.append((u, v))
    return window


def enumerate_C(u: IndexSeq, v: IndexSeq, sigma1: str, sigma2: str) -> List[PartitionSeq]:
    """lam in P^(2) with lam1+lam2 = |u|+|v|-2 and lam2 >= u_sigma1(2) + v_sigma2(2), lam2 ascending."""
    total = sum(u) + sum(v) - 2
    if total < 0:
        return []
    floor = u[second_position(sigma1)] + v[second_position(sigma2)]
    return [make_partition((total - lam2, lam2)) for lam2 in range(floor, total // 2 + 1)]


def _q_product(subscripts: Tuple[int, ...], n: int) -> ExactPoly:
    product = ExactPoly.one(VariableSpace(n))
    for r in subscripts:
        if r < 0:
            return ExactPoly.zero(VariableSpace(n))
        product = product * q_r(r, n)
    return product


def check_q_expression(lam: PartitionSeq, n: int, variant: str) -> CheckReport:
    """
    Q_(2lam1+4, 2lam2+2)(x,x) = 4 sum sgn sgn sum_B q_(2u1) q_(2u2+1) q_(2v1) q_(2v2+1)        (even)
    Q_(2lam1+3, 2lam2+1)(x,x) = 4 sum sgn sgn sum_B q_(2u1) q_(2u2+1) q_(2v1-1) q_(2v2)        (odd)
    in n variables.
    """
    lam1, lam2 = _length_two(lam)
    if variant == "even":
        shape = scale_add(make_partition((lam1, lam2)), 2, (4, 2), 2)
    elif variant == "odd":
        shape = scale_add(make_partition((lam1, lam2)), 2, (3, 1), 2)
    else:
        raise ValueError(f"unknown variant '{variant}'")
    space = VariableSpace(n)
    signed_sum = ExactPoly.zero(space)
    for sigma1 in PERMUTATIONS:
        for sigma2 in PERMUTATIONS:
            block = ExactPoly.zero(space)
            for u, v in enumerate_B((lam1, lam2), sigma1, sigma2):
                if variant == "even":
                    subscripts = (2 * u[0], 2 * u[1] + 1, 2 * v[0], 2 * v[1] + 1)
                else:
                    subscripts = (2 * u[0], 2 * u[1] + 1, 2 * v[0] - 1, 2 * v[1])
                block = block + _q_product(subscripts, n)
            signed_sum = signed_sum + block * (sgn(sigma1) * sgn(sigma2))
    difference = schur_q(shape, n, "doubled") - signed_sum * 4
    return make_report("q_expression", {"n": n, "lambda": make_partition((lam1, lam2)), "variant": variant}, difference)


def _require_two_columns(xi: PartitionSeq) -> PartitionSeq:
    xi = make_partition(xi)
    if xi and xi[0] > 2:
        raise ValueError(f"xi must have parts <= 2, got {render(xi)}")
    return xi


def signed_c_sum(xi: PartitionSeq, u: IndexSeq, v: IndexSeq) -> int:
    """sum over sigma1, sigma2 of sgn sgn sum over lam in C(u,v;sigma1,sigma2) of K^-1_(xi, lam')."""
    total = 0
    for sigma1 in PERMUTATIONS:
        for sigma2 in PERMUTATIONS:
            sign = sgn(sigma1) * sgn(sigma2)
            for lam in enumerate_C(u, v, sigma1, sigma2):
                total += sign * inverse_kostka(xi, conjugate(lam))
    return total


def split_kostka_sum(xi: PartitionSeq, u_shape: PartitionSeq, v_shape: PartitionSeq) -> int:
    """sum over eta U zeta = xi of K^-1_(eta, u_shape') K^-1_(zeta, v_shape')."""
    u_conj, v_conj = conjugate(u_shape), conjugate(v_shape)
    total = 0
    for eta, zeta in splits(xi):
        if sum(eta) != sum(u_shape) or sum(zeta) != sum(v_shape):
            continue
        total += inverse_kostka(eta, u_conj) * inverse_kostka(zeta, v_conj)
    return total


def check_inverse_kostka_identity(xi: PartitionSeq, u: IndexSeq, v: IndexSeq) -> CheckReport:
    """
    sum_(eta U zeta = xi) K^-1_(eta,(u1-1,u2)') K^-1_(zeta,(v1-1,v2)')
        = sum sgn sgn sum_(lam in C(u,v)) K^-1_(xi,lam')

    Raises:
        ValueError: u2 >= u1, v2 >= v1, or a part of xi above 2.
    """
    xi = _require_two_columns(xi)
    if len(u) != 2 or len(v) != 2 or u[1] >= u[0] or v[1] >= v[0]:
        raise ValueError(f"need u2 < u1 and v2 < v1, got u={render(u)} v={render(v)}")
    lhs = split_kostka_sum(xi, make_partition((u[0] - 1, u[1])), make_partition((v[0] - 1, v[1])))
    rhs = signed_c_sum(xi, u, v)
    return make_report("inverse_kostka_identity", {"xi": xi, "u": tuple(u), "v": tuple(v)}, lhs - rhs)


def _n2_subscripts(u: IndexSeq, v: IndexSeq, variant: str) -> Tuple[int, ...]:
    if variant == "even":
        return (2 * u[0], 2 * u[1] + 1, 2 * v[0], 2 * v[1] + 1)
    return (2 * u[0] - 1, 2 * u[1], 2 * v[0], 2 * v[1] + 1)


def _a2_shape(u: IndexSeq) -> Tuple[PartitionSeq, int]:
    """(tau_u^-1 u - delta, sgn(tau_u)) for u in A_2."""
    ordered, sign = sort_with_sign(u)
    return make_partition((ordered[0] - 1, ordered[1])), sign


def check_n2_coefficient_identity(xi: PartitionSeq, variant: str) -> CheckReport:
    """
    Coefficient of e_xi(y^2) in the n = 2 theorem, by three routes: the
    A_2 double sum with split-wise inverse-Kostka products, the C-set sum
    over all of Z>=0^2 x Z>=0^2, and 1/4 sum K^-1_(xi,lam') Q_(target)(x,x).
    """
    if variant not in ("even", "odd"):
        raise ValueError(f"unknown variant '{variant}'")
    xi = _require_two_columns(xi)
    n = 2
    space = VariableSpace(n)
    degree = 2 * sum(xi) + (6 if variant == "even" else 4)
    window = sum(xi) + 2

    def contribution(u: IndexSeq, v: IndexSeq, scalar: int) -> ExactPoly:
        term = _q_product(_n2_subscripts(u, v, variant), n)
        if not term.is_zero() and not term.is_homogeneous(degree):
            raise AssertionError(f"term for u={render(u)} v={render(v)} is not of degree {degree}")
        return term * scalar

    a2_route = ExactPoly.zero(space)
    c_route = ExactPoly.zero(space)
    for entry in compositions(window, 4):
        u, v = entry[:2], entry[2:]
        c_scalar = signed_c_sum(xi, u, v)
        if c_scalar:
            c_route = c_route + contribution(u, v, c_scalar)
        if not (is_distinct(u) and is_distinct(v)):
            continue
        u_shape, u_sign = _a2_shape(u)
        v_shape, v_sign = _a2_shape(v)
        a2_scalar = u_sign * v_sign * split_kostka_sum(xi, u_shape, v_shape)
        if a2_scalar:
            a2_route = a2_route + contribution(u, v, a2_scalar)

    rhs = ebasis_rhs(xi, n, variant)
    if not rhs.is_zero() and not rhs.is_homogeneous(degree):
        raise AssertionError(f"right side for xi={render(xi)} is not of degree {degree}")

    params = {"xi": xi, "variant": variant}
    gap = a2_route - c_route
    if not gap.is_zero():
        return make_report("n2_coefficient_identity", params, gap, label="window - C-route")
    return make_report("n2_coefficient_identity", params, a2_route - rhs, label="lhs - rhs")
