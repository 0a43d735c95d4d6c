import pytest

from symcheck.bases.littlewood import lr_coefficients
from symcheck.combinat.partitions import PartitionError, enumerate_partitions


def test_pieri_products():
    assert lr_coefficients((1,), (1,), 2) == {(2,): 1, (1, 1): 1}
    assert lr_coefficients((1,), (1,), 1) == {(2,): 1}
    assert lr_coefficients((2,), (1,), 3) == {(3,): 1, (2, 1): 1}


def test_coefficient_two_in_three_variables():
    assert lr_coefficients((2, 1), (2, 1), 3) == {
        (4, 2): 1,
        (4, 1, 1): 1,
        (3, 3): 1,
        (3, 2, 1): 2,
        (2, 2, 2): 1,
    }


def test_symmetric_in_factors():
    assert lr_coefficients((2,), (1, 1), 3) == lr_coefficients((1, 1), (2,), 3)


def test_empty_factor():
    assert lr_coefficients((), (2, 1), 2) == {(2, 1): 1}


def test_length_bound():
    with pytest.raises(PartitionError):
        lr_coefficients((1, 1), (1,), 1)


@pytest.mark.slow
def test_symmetry_and_non_negativity_sweep():
    n = 3
    for total in range(9):
        for a in range(total + 1):
            for mu in enumerate_partitions(a, max_length=n):
                for nu in enumerate_partitions(total - a, max_length=n):
                    table = lr_coefficients(mu, nu, n)
                    assert all(c > 0 for c in table.values())
                    assert all(sum(lam) == total for lam in table)
                    assert table == lr_coefficients(nu, mu, n)


@pytest.mark.slow
def test_coefficients_rebuild_products():
    from symcheck.bases.classical import schur
    from symcheck.poly.exact_poly import ExactPoly

    for n in (1, 2, 3):
        for total in range(9):
            for a in range(total + 1):
                for mu in enumerate_partitions(a, max_length=n):
                    for nu in enumerate_partitions(total - a, max_length=n):
                        rebuilt = ExactPoly.zero(schur((), n).space)
                        for lam, c in lr_coefficients(mu, nu, n).items():
                            rebuilt = rebuilt + schur(lam, n) * c
                        assert rebuilt == schur(mu, n) * schur(nu, n)
