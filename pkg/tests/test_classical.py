import random

import pytest

from symcheck.bases.classical import (
    BasisExpansionError,
    alternant,
    basis_poly,
    expand_in_basis,
    expand_in_basis_over,
    is_symmetric,
    reconstruct,
    schur,
    vandermonde,
)
from symcheck.combinat.partitions import PartitionError, enumerate_partitions
from symcheck.poly.exact_poly import ExactPoly


def test_basis_polynomials(space2, var):
    x1, x2 = var(space2, "x1"), var(space2, "x2")
    assert basis_poly("monomial", (2, 1), 2) == x1 ** 2 * x2 + x1 * x2 ** 2
    assert basis_poly("elementary", (2,), 2) == x1 * x2
    assert basis_poly("elementary", (1, 1), 2) == (x1 + x2) ** 2
    assert basis_poly("powersum", (2,), 2) == x1 ** 2 + x2 ** 2
    assert basis_poly("monomial", (), 2) == 1


def test_basis_bounds():
    with pytest.raises(PartitionError):
        basis_poly("monomial", (1, 1, 1), 2)
    with pytest.raises(PartitionError):
        basis_poly("elementary", (3,), 2)
    with pytest.raises(ValueError):
        basis_poly("forgotten", (1,), 2)


def test_alternants(space2, var):
    x1, x2 = var(space2, "x1"), var(space2, "x2")
    assert vandermonde(2) == x1 - x2
    assert alternant((1, 1), 2).is_zero()
    with pytest.raises(PartitionError):
        alternant((1,), 2)


def test_schur_small_cases(space2, var):
    x1, x2 = var(space2, "x1"), var(space2, "x2")
    assert schur((), 2) == 1
    assert schur((1,), 2) == x1 + x2
    assert schur((1, 1), 2) == x1 * x2
    assert schur((2,), 2) == x1 ** 2 + x1 * x2 + x2 ** 2
    assert str(schur((2, 1), 2)) == "x1^2*x2 + x1*x2^2"
    with pytest.raises(PartitionError):
        schur((1, 1, 1), 2)


def test_schur_monomial_expansion_is_kostka():
    assert expand_in_basis(schur((2, 1), 3), "monomial", 3) == {(2, 1): 1, (1, 1, 1): 2}
    assert expand_in_basis(schur((3,), 2), "monomial", 2) == {(3,): 1, (2, 1): 1}


def test_expand_in_schur_and_elementary():
    assert expand_in_basis(basis_poly("powersum", (2,), 2), "schur", 2) == {(2,): 1, (1, 1): -1}
    assert expand_in_basis(schur((1, 1), 2), "elementary", 2) == {(2,): 1}
    assert expand_in_basis(schur((2,), 2), "elementary", 2) == {(1, 1): 1, (2,): -1}


@pytest.mark.parametrize("family", ["monomial", "schur", "elementary"])
def test_expansion_reconstructs(family):
    rng = random.Random(11)
    n = 3
    f = ExactPoly.zero(schur((), n).space)
    for w in range(4):
        for lam in enumerate_partitions(w, max_length=n):
            f = f + schur(lam, n) * rng.randint(-4, 4)
    expansion = expand_in_basis(f, family, n)
    assert reconstruct(expansion, family, n) == f


def test_non_symmetric_input_is_rejected(space2, var):
    x1 = var(space2, "x1")
    assert not is_symmetric(x1)
    with pytest.raises(BasisExpansionError):
        expand_in_basis(x1, "schur", 2)
    with pytest.raises(BasisExpansionError):
        expand_in_basis(var(space2, "y1"), "schur", 2)
    with pytest.raises(ValueError):
        expand_in_basis(x1, "hall", 2)


def test_expand_over_one_block(space2, var):
    x1, x2, y1, y2 = (var(space2, name) for name in ("x1", "x2", "y1", "y2"))
    f = (x1 + x2) * (y1 + y2) + x1 * x2 * y1 ** 2
    over_x = expand_in_basis_over(f, "schur", 2, "x")
    assert over_x == {(1, 1): y1 ** 2, (1,): y1 + y2}
    over_y = expand_in_basis_over((x1 + x2) * (y1 + y2), "schur", 2, "y")
    assert over_y == {(1,): x1 + x2}


def test_documented_expansions(space2, var):
    x1, x2 = var(space2, "x1"), var(space2, "x2")
    assert alternant((0, 1), 2) == x2 - x1
    assert expand_in_basis(schur((2,), 2), "monomial", 2) == {(2,): 1, (1, 1): 1}
    assert expand_in_basis(basis_poly("elementary", (1, 1), 2), "monomial", 2) == {(2,): 1, (1, 1): 2}
    assert expand_in_basis(x1 + x2, "monomial", 2) == {(1,): 1}
