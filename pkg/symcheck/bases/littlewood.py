"""Littlewood-Richardson coefficients of Lambda_n by expanding s_mu * s_nu in the Schur basis."""

from functools import lru_cache
from typing import Dict

from symcheck.bases.classical import expand_in_basis, schur
from symcheck.combinat.partitions import PartitionError, PartitionSeq, render


@lru_cache(maxsize=None)
def _lr_table(mu: PartitionSeq, nu: PartitionSeq, n: int) -> Dict[PartitionSeq, int]:
    expansion = expand_in_basis(schur(mu, n) * schur(nu, n), "schur", n)
    table = {}
    for lam, c in expansion.items():
        if c.denominator != 1 or c < 0:
            raise ArithmeticError(f"c^{render(lam)}_({render(mu)},{render(nu)}) = {c} is not a non-negative integer")
        table[lam] = int(c)
    return table


def lr_coefficients(mu: PartitionSeq, nu: PartitionSeq, n: int) -> Dict[PartitionSeq, int]:
    """
    {lam: c^lam_(mu,nu)} with s_mu * s_nu = sum c^lam_(mu,nu) s_lam in x1..xn.

    Raises:
        PartitionError: l(mu) > n or l(nu) > n.
    """
    if len(mu) > n or len(nu) > n:
        raise PartitionError(f"lr_coefficients needs l(mu), l(nu) <= {n}, got {render(mu)} and {render(nu)}")
    return dict(_lr_table(mu, nu, n))
