"""
Series Checks - totally even/odd parts, the Phi series, the Cauchy-type
product and the defining relations of f_lambda / g_lambda.

Everything is truncated in the y grading and compared in multiplied form:
a truncated series is never divided by a_delta(y^2).
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from symcheck.bases.classical import alternant, basis_poly, schur, vandermonde
from symcheck.combinat.partitions import pad, partitions_up_to, scale_add, staircase
from symcheck.engine.conjecture import f_g_poly
from symcheck.evaluator.evaluator import make_report
from symcheck.models.schemas import CheckReport
from symcheck.poly.exact_poly import (
    ExactPoly,
    VariableSpace,
    graded_exp,
    move_block,
    sum_polys,
    truncated_product,
)
from symcheck.qfunctions.q_series import schur_2reduced

logger = logging.getLogger(__name__)

SIGNS = ("plus", "minus")


class PhiSeries(NamedTuple):
    """TE_y or TO_y of a_delta(y) * exp(...), and the divisor a_delta(y^2) it stands over."""
    numerator: ExactPoly
    denominator: ExactPoly


def te_to(f: ExactPoly, kind: str, block: str = "y") -> ExactPoly:
    """Keep the terms whose every exponent in `block` is even (kind 'even') or odd (kind 'odd'); 0 counts as even."""
    if kind not in ("even", "odd"):
        raise ValueError(f"unknown parity '{kind}' (expected 'even' or 'odd')")
    parity = 0 if kind == "even" else 1
    slots = f.space.block_slots(block)
    return f.select(lambda key: all(key[s] % 2 == parity for s in slots))


def y_product(n: int) -> ExactPoly:
    """y1*y2*...*yn."""
    space = VariableSpace(n)
    return ExactPoly.monomial(space, {f"y{i}": 1 for i in range(1, n + 1)})


def in_y_squared(p: ExactPoly) -> ExactPoly:
    """p(x) -> p(y^2)."""
    return move_block(p, "x", "y", power=2)


@lru_cache(maxsize=None)
def odd_power_kernel(n: int, max_degree: int) -> ExactPoly:
    """sum over odd m <= max_degree of (2/m) p_m(x) p_m(y)."""
    space = VariableSpace(n)
    terms = []
    for m in range(1, max_degree + 1, 2):
        p_m = basis_poly("powersum", (m,), n)
        terms.append((p_m * move_block(p_m, "x", "y")) * Fraction(2, m))
    return sum_polys(terms, space)


@lru_cache(maxsize=None)
def exp_series(n: int, max_degree: int) -> ExactPoly:
    return graded_exp(odd_power_kernel(n, max_degree), "y", max_degree)


@lru_cache(maxsize=None)
def phi_series(n: int, sign: str, max_degree: int) -> PhiSeries:
    """
    TE_y (sign 'plus') or TO_y (sign 'minus') of a_delta(y) * exp(...) up to
    y-degree max_degree, paired with a_delta(y^2).

    Raises:
        ValueError: max_degree < n(n-1), below the lowest term.
    """
    if sign not in SIGNS:
        raise ValueError(f"unknown sign '{sign}' (expected one of {SIGNS})")
    if max_degree < n * (n - 1):
        raise ValueError(f"y-degree bound {max_degree} is below n(n-1) = {n * (n - 1)}")
    a_delta_y = move_block(vandermonde(n), "x", "y")
    product = truncated_product(a_delta_y, exp_series(n, max_degree), "y", max_degree)
    numerator = te_to(product, "even" if sign == "plus" else "odd")
    logger.debug(f"phi_series n={n} sign={sign} D={max_degree}: {len(numerator.terms)} terms")
    return PhiSeries(numerator, in_y_squared(vandermonde(n)))


def phi_expansion(n: int, sign: str, max_degree: int) -> ExactPoly:
    """a_delta(y^2) * sum_lam s_lam(y^2) S_(2lam+delta)(x), times y1..yn and with Delta for 'minus'."""
    space = VariableSpace(n)
    base = n * (n - 1) + (n if sign == "minus" else 0)
    shift = staircase(n, "small" if sign == "plus" else "big")
    total = ExactPoly.zero(space)
    for lam in partitions_up_to(max(0, (max_degree - base) // 2), max_length=n):
        if base + 2 * sum(lam) > max_degree:
            continue
        total = total + in_y_squared(schur(lam, n)) * schur_2reduced(scale_add(lam, 2, shift, n), n)
    if sign == "minus":
        total = total * y_product(n)
    return in_y_squared(vandermonde(n)) * total


def check_phi(n: int, sign: str, max_degree: int) -> CheckReport:
    """Multiplied form of the Phi expansion, truncated at y-degree max_degree."""
    phi = phi_series(n, sign, max_degree)
    difference = phi_expansion(n, sign, max_degree) - phi.numerator
    return make_report("phi", {"n": n, "sign": sign, "D": max_degree}, difference)


def cauchy_product(n: int, max_degree: int) -> ExactPoly:
    """prod_(i,j) (1 + x_i y_j) / (1 - x_i y_j) expanded factor-wise and truncated in y."""
    space = VariableSpace(n)
    result = ExactPoly.one(space)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            factor = ExactPoly.one(space)
            for k in range(1, max_degree + 1):
                factor = factor + ExactPoly.monomial(space, {f"x{i}": k, f"y{j}": k}, 2)
            result = truncated_product(result, factor, "y", max_degree)
    return result


def check_cauchy(n: int, max_degree: int) -> CheckReport:
    """
    sum_lam s_lam(y) S_lam(x) against the product kernel, and the product
    kernel against exp(sum_(m odd) (2/m) p_m(x) p_m(y)), up to y-degree max_degree.
    """
    space = VariableSpace(n)
    schur_sum = ExactPoly.zero(space)
    for lam in partitions_up_to(max_degree, max_length=n):
        schur_sum = schur_sum + move_block(schur(lam, n), "x", "y") * schur_2reduced(lam, n)
    product = cauchy_product(n, max_degree)
    params = {"n": n, "D": max_degree}
    difference = schur_sum - product
    if not difference.is_zero():
        return make_report("cauchy", params, difference, label="schur sum - product")
    return make_report("cauchy", params, product - exp_series(n, max_degree), label="product - exp")


def defining_relation_base(n: int, variant: str) -> int:
    """Lowest y-degree of the defining relation: 2n^2 (even) or 2n^2 - n (odd)."""
    return 2 * n * n - (n if variant == "odd" else 0)


def check_defining_relation(n: int, variant: str, max_degree: int) -> CheckReport:
    """
    even: TO(..)^2 = a_delta(y^2) sum_lam a_(lam+Delta)(y^2) f_lam
    odd:  TE(..) TO(..) = a_delta(y^2) sum_lam y1..yn a_(lam+delta)(y^2) g_lam
    both truncated at y-degree max_degree.

    Raises:
        ValueError: max_degree below the lambda = empty term.
    """
    base = defining_relation_base(n, variant)
    if max_degree < base:
        raise ValueError(f"y-degree bound {max_degree} is below the lowest term {base}")
    minus = phi_series(n, "minus", max_degree).numerator
    other = minus if variant == "even" else phi_series(n, "plus", max_degree).numerator
    lhs = truncated_product(minus, other, "y", max_degree)

    space = VariableSpace(n)
    shift = staircase(n, "big" if variant == "even" else "small")
    rhs = ExactPoly.zero(space)
    for lam in partitions_up_to((max_degree - base) // 2, max_length=n):
        shifted = pad(scale_add(lam, 1, shift, n), n)
        term = in_y_squared(alternant(shifted, n)) * f_g_poly(lam, n, variant)
        rhs = rhs + term
    if variant == "odd":
        rhs = rhs * y_product(n)
    rhs = in_y_squared(vandermonde(n)) * rhs
    return make_report("defining_relation", {"n": n, "variant": variant, "D": max_degree}, lhs - rhs)
