import random

import pytest

from symcheck.poly.exact_poly import ExactPoly
from symcheck.poly.linalg import determinant
from symcheck.qfunctions.pfaffian import SkewTable, pfaffian


def test_small_orders(space1, var):
    x1 = var(space1, "x1")
    assert pfaffian(SkewTable.from_rows(space1, [])) == 1
    assert pfaffian(SkewTable.from_upper(space1, 2, {(0, 1): x1})) == x1
    upper = {(0, 1): 1, (0, 2): 2, (0, 3): 3, (1, 2): 4, (1, 3): 5, (2, 3): 6}
    table = SkewTable.from_upper(space1, 4, {k: ExactPoly.constant(space1, v) for k, v in upper.items()})
    assert pfaffian(table) == 8


def test_from_rows_lifts_scalars(space1):
    table = SkewTable.from_rows(space1, [[0, 3], [-3, 0]])
    assert table.is_skew()
    assert pfaffian(table) == 3


def test_rejects_bad_tables(space1):
    with pytest.raises(ValueError):
        pfaffian(SkewTable.from_rows(space1, [[0]]))
    with pytest.raises(ValueError):
        pfaffian(SkewTable.from_rows(space1, [[0, 1], [1, 0]]))
    with pytest.raises(ValueError):
        SkewTable.from_upper(space1, 2, {(1, 0): ExactPoly.one(space1)})


@pytest.mark.parametrize("order", [2, 4, 6])
def test_square_is_determinant(space1, random_poly, order):
    rng = random.Random(order)
    upper = {
        (i, j): random_poly(rng, space1, max_degree=2, terms=2)
        for i in range(order)
        for j in range(i + 1, order)
    }
    table = SkewTable.from_upper(space1, order, upper)
    pf = pfaffian(table)
    assert pf * pf == determinant(table.entries, ExactPoly.one(space1))
