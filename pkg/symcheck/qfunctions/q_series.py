"""
Q Series - the q_r family, 2-reduced Schur polynomials and Schur Q-functions.

Kinds of q_r, all in VariableSpace(n):
  single    coefficient of t^r in prod_i (1 + x_i t) / (1 - x_i t), x block
  doubled   q_r(x, x) = sum_s q_s * q_(r-s), x block
  compound  the single series over both blocks x and y together

q_r is zero for r < 0 in every kind.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from symcheck.combinat.partitions import PartitionSeq, compositions, make_partition
from symcheck.poly.exact_poly import ExactPoly, VariableSpace, sum_polys
from symcheck.poly.linalg import determinant
from symcheck.qfunctions.pfaffian import SkewTable, pfaffian

KINDS = ("single", "doubled", "compound")


@lru_cache(maxsize=None)
def q_r(r: int, n: int, kind: str = "single") -> ExactPoly:
    """
    q_r in the chosen kind; homogeneous of degree r.

    single and compound convolve the per-variable series 1 + 2*sum_k z^k t^k,
    so the coefficient of a monomial is 2 to the number of variables in it.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown q-series kind '{kind}' (expected one of {KINDS})")
    space = VariableSpace(n)
    if r < 0:
        return ExactPoly.zero(space)
    if kind == "doubled":
        return sum_polys((q_r(s, n) * q_r(r - s, n) for s in range(r + 1)), space)
    slots = n if kind == "single" else 2 * n
    terms = {}
    for exponents in compositions(r, slots):
        key = exponents + (0,) * (2 * n - slots)
        terms[key] = 2 ** sum(1 for e in exponents if e)
    return ExactPoly(space, terms)


def alternating_convolution(r: int, n: int) -> ExactPoly:
    """sum_s (-1)^s q_s q_(r-s); zero for every r >= 1."""
    space = VariableSpace(n)
    return sum_polys(((q_r(s, n) * q_r(r - s, n)).scale(-1 if s % 2 else 1) for s in range(r + 1)), space)


@lru_cache(maxsize=None)
def schur_2reduced(lam: PartitionSeq, n: int, kind: str = "single") -> ExactPoly:
    """
    S_lam = det(q_(lam_i - i + j)) of order l(lam) in x1..xn.

    The determinant is unchanged by padding lam with zero parts, so no
    bound on l(lam) against n is needed.
    """
    lam = make_partition(lam)
    order = len(lam)
    rows = [[q_r(lam[i] - i + j, n, kind) for j in range(order)] for i in range(order)]
    return determinant(rows, ExactPoly.one(VariableSpace(n)))


@lru_cache(maxsize=None)
def q_pair(r: int, s: int, n: int, kind: str = "single") -> ExactPoly:
    """
    Q_(r,s) = q_r q_s + 2 sum_(i=1..s) (-1)^i q_(r+i) q_(s-i), with Q_(0,0) = 0.
    """
    if r < 0 or s < 0:
        raise ValueError(f"Q_(r,s) needs r, s >= 0, got ({r},{s})")
    space = VariableSpace(n)
    if r == 0 and s == 0:
        return ExactPoly.zero(space)
    total = q_r(r, n, kind) * q_r(s, n, kind)
    for i in range(1, s + 1):
        term = q_r(r + i, n, kind) * q_r(s - i, n, kind)
        total = total + term.scale(-2 if i % 2 else 2)
    return total


def q_pair_table(parts: Sequence[int], n: int, kind: str = "single") -> SkewTable:
    """Skew table (Q_(lam_i, lam_j)) over the given parts (already of even count)."""
    space = VariableSpace(n)
    order = len(parts)
    upper = {(i, j): q_pair(parts[i], parts[j], n, kind) for i in range(order) for j in range(i + 1, order)}
    return SkewTable.from_upper(space, order, upper)


@lru_cache(maxsize=None)
def schur_q(lam: PartitionSeq, n: int, kind: str = "single") -> ExactPoly:
    """Q_lam = Pf(Q_(lam_i, lam_j)) with lam padded by one zero part when its length is odd."""
    lam = make_partition(lam)
    parts = list(lam) + ([0] if len(lam) % 2 else [])
    return pfaffian(q_pair_table(parts, n, kind))


def power_of_two(k: int) -> Fraction:
    """2^k as an exact rational, k may be negative."""
    return Fraction(2) ** k
