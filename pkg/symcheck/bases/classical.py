"""
Classical Bases - monomial, elementary and power-sum polynomials, alternants,
bialternant Schur polynomials and basis expansion.

All basis polynomials live in the x block of VariableSpace(n). Expansions
work one weight block at a time: monomial coefficients are read directly off
the dominant exponent keys, the Schur family is solved against the
unitriangular Kostka block and the elementary family by dense elimination.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Dict, List

from symcheck.bases.kostka import inverse_kostka_block
from symcheck.combinat.counting import permutation_sign
from symcheck.combinat.partitions import (
    PartitionError,
    PartitionSeq,
    IndexSeq,
    enumerate_partitions,
    make_partition,
    pad,
    render,
    staircase,
)
from symcheck.poly.exact_poly import ExactPoly, Key, VariableSpace, VariableSpaceError
from symcheck.poly.linalg import solve_left

logger = logging.getLogger(__name__)

BasisExpansion = Dict[PartitionSeq, Fraction]

FAMILIES = ("monomial", "schur", "elementary")


class BasisExpansionError(ValueError):
    """The input is not symmetric, or lies outside the span of the family."""


def _orbit(exponents: IndexSeq) -> List[IndexSeq]:
    return sorted(set(permutations(exponents)), reverse=True)


@lru_cache(maxsize=None)
def basis_poly(kind: str, lam: PartitionSeq, n: int) -> ExactPoly:
    """
    m_lam, e_lam or p_lam in x1..xn.

    Raises:
        PartitionError: monomial with l(lam) > n, or elementary with lam_1 > n.
    """
    space = VariableSpace(n)
    if kind == "monomial":
        if len(lam) > n:
            raise PartitionError(f"m_{render(lam)} needs l(lambda) <= {n}")
        exponents = pad(lam, n)
        return ExactPoly(space, {e + (0,) * n: 1 for e in _orbit(exponents)})
    if kind == "elementary":
        if lam and lam[0] > n:
            raise PartitionError(f"e_{render(lam)} needs lambda_1 <= {n}")
        result = ExactPoly.one(space)
        for part in lam:
            result = result * basis_poly("monomial", (1,) * part, n)
        return result
    if kind == "powersum":
        result = ExactPoly.one(space)
        for part in lam:
            result = result * basis_poly("monomial", (part,), n)
        return result
    raise ValueError(f"unknown basis kind '{kind}' (expected monomial, elementary or powersum)")


def alternant(alpha: IndexSeq, n: int) -> ExactPoly:
    """a_alpha = sum over permutations of sgn(sigma) sigma(x^alpha); zero on repeated entries."""
    if len(alpha) != n:
        raise PartitionError(f"alternant needs {n} exponents, got {list(alpha)}")
    space = VariableSpace(n)
    terms: Dict[Key, int] = {}
    for perm in permutations(range(n)):
        key = [0] * (2 * n)
        for i, target in enumerate(perm):
            key[target] = alpha[i]
        key = tuple(key)
        terms[key] = terms.get(key, 0) + permutation_sign(perm)
    return ExactPoly(space, terms)


@lru_cache(maxsize=None)
def vandermonde(n: int) -> ExactPoly:
    return alternant(tuple(range(n - 1, -1, -1)), n)


@lru_cache(maxsize=None)
def schur(lam: PartitionSeq, n: int) -> ExactPoly:
    """
    Bialternant s_lam = a_(lam+delta) / a_delta in x1..xn.

    Raises:
        PartitionError: l(lam) > n.
        ExactDivisionError: the division left a remainder (an arithmetic bug).
    """
    if len(lam) > n:
        raise PartitionError(f"s_{render(lam)} needs l(lambda) <= {n}")
    delta = staircase(n, "big")
    alpha = tuple(p + d - 1 for p, d in zip(pad(lam, n), delta))
    return alternant(alpha, n).exact_divide(vandermonde(n))


def is_symmetric(f: ExactPoly, block: str = "x") -> bool:
    """Invariance under every adjacent transposition inside `block`."""
    slots = list(f.space.block_slots(block))
    for a, b in zip(slots, slots[1:]):
        for key, c in f.terms.items():
            swapped = list(key)
            swapped[a], swapped[b] = swapped[b], swapped[a]
            if f.terms.get(tuple(swapped), 0) != c:
                return False
    return True


def _monomial_coefficients(f: ExactPoly, n: int) -> Dict[int, Dict[PartitionSeq, Fraction]]:
    by_weight: Dict[int, Dict[PartitionSeq, Fraction]] = {}
    for key, c in f.terms.items():
        xs = key[:n]
        if all(xs[i] >= xs[i + 1] for i in range(n - 1)):
            by_weight.setdefault(sum(xs), {})[make_partition(xs)] = Fraction(c)
    return by_weight


def expand_in_basis(f: ExactPoly, family: str, n: int) -> BasisExpansion:
    """
    Coefficients of a symmetric polynomial in x1..xn in the chosen family.

    The reconstruction is checked against f before returning.

    Raises:
        BasisExpansionError: f uses y variables, is not symmetric, or is not
            reproduced by the computed coefficients.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family '{family}' (expected one of {FAMILIES})")
    if f.space.n != n:
        raise VariableSpaceError(f"expansion over {n} variables given a polynomial in VariableSpace({f.space.n})")
    if f.degree("y") > 0:
        raise BasisExpansionError("expand_in_basis works on the x block only; use expand_in_basis_over")
    if not is_symmetric(f, "x"):
        raise BasisExpansionError(f"polynomial is not symmetric in x1..x{n}: {f}")

    by_weight = _monomial_coefficients(f, n)
    result: BasisExpansion = {}
    for w in sorted(by_weight, reverse=True):
        block = by_weight[w]
        if family == "monomial":
            coeffs = block
        elif family == "schur":
            coeffs = _solve_schur(block, w, n)
        else:
            coeffs = _solve_elementary(block, w, n)
        for lam in enumerate_partitions(w):
            c = coeffs.get(lam, 0)
            if c:
                result[lam] = c

    rebuilt = reconstruct(result, family, n)
    if rebuilt != f:
        raise BasisExpansionError(f"polynomial is not in the span of the {family} family over {n} variables")
    return result


def _solve_schur(block: Dict[PartitionSeq, Fraction], w: int, n: int) -> Dict[PartitionSeq, Fraction]:
    inverse = inverse_kostka_block(w, n)
    coeffs = {}
    for lam in inverse.index:
        coeffs[lam] = sum((c * inverse.entry(mu, lam) for mu, c in block.items()), Fraction(0))
    return coeffs


def _solve_elementary(block: Dict[PartitionSeq, Fraction], w: int, n: int) -> Dict[PartitionSeq, Fraction]:
    rows = enumerate_partitions(w, max_part=n)
    cols = enumerate_partitions(w, max_length=n)
    matrix = []
    for lam in rows:
        e = basis_poly("elementary", lam, n)
        matrix.append([e.coefficient(pad(mu, n) + (0,) * n) for mu in cols])
    solution = solve_left(matrix, [block.get(mu, Fraction(0)) for mu in cols])
    return dict(zip(rows, solution))


def reconstruct(expansion: BasisExpansion, family: str, n: int) -> ExactPoly:
    space = VariableSpace(n)
    total = ExactPoly.zero(space)
    for lam, c in expansion.items():
        basis = schur(lam, n) if family == "schur" else basis_poly(family, lam, n)
        total = total + basis * c
    return total


def expand_in_basis_over(f: ExactPoly, family: str, n: int, block: str) -> Dict[PartitionSeq, ExactPoly]:
    """
    Expand f in the chosen family of the variables of `block`, with
    coefficients that are polynomials in the other block.

    Each slice of f at a fixed exponent of the other block is moved onto the
    x block, expanded with expand_in_basis, and reassembled.
    """
    space = f.space
    if space.n != n:
        raise VariableSpaceError(f"expansion over {n} variables given a polynomial in VariableSpace({space.n})")
    inside = list(space.block_slots(block))
    outside = [s for s in range(space.size) if s not in inside]
    slices: Dict[Key, Dict[Key, Fraction]] = {}
    for key, c in f.terms.items():
        outer = tuple(key[s] if s in outside else 0 for s in range(space.size))
        inner = tuple(key[s] for s in inside) + (0,) * n
        slices.setdefault(outer, {})[inner] = c

    result: Dict[PartitionSeq, ExactPoly] = {}
    for outer, terms in slices.items():
        for lam, c in expand_in_basis(ExactPoly(space, terms), family, n).items():
            result[lam] = result.get(lam, ExactPoly.zero(space)) + ExactPoly(space, {outer: c})
    return {lam: result[lam] for lam in sorted(result, key=lambda p: (sum(p), p), reverse=True) if result[lam]}
