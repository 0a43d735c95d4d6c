import random
from fractions import Fraction

import pytest

from symcheck.poly.exact_poly import (
    ExactDivisionError,
    ExactPoly,
    VariableSpace,
    VariableSpaceError,
    graded_exp,
    move_block,
    truncated_product,
)


def test_rendering(space2, var):
    x1, x2 = var(space2, "x1"), var(space2, "x2")
    assert str((x1 + x2) ** 2) == "x1^2 + 2*x1*x2 + x2^2"
    assert str(-x1) == "-x1"
    assert str(x1 - x2) == "x1 - x2"
    assert str(x2 ** 3 * Fraction(1, 2)) == "1/2*x2^3"
    assert str(ExactPoly.zero(space2)) == "0"
    assert str(ExactPoly.constant(space2, -3)) == "-3"


def test_zero_coefficients_are_dropped(space1, var):
    x1 = var(space1, "x1")
    assert (x1 - x1).is_zero()
    assert ExactPoly(space1, {(1, 0): 0}).terms == {}
    assert (x1 * Fraction(2, 2)).terms == {(1, 0): 1}


def test_scalar_equality_and_coercion(space1, var):
    x1 = var(space1, "x1")
    assert ExactPoly.constant(space1, 3) == 3
    assert (x1 + 1) - x1 == 1
    assert 2 * x1 == x1 + x1
    assert x1 / 2 == x1 * Fraction(1, 2)


def test_mismatched_spaces_raise(space1, space2, var):
    with pytest.raises(VariableSpaceError):
        var(space1, "x1") + var(space2, "x1")


def test_variable_names(space2):
    assert space2.names("y") == ["y1", "y2"]
    assert space2.slot("y1") == 2
    with pytest.raises(VariableSpaceError):
        space2.slot("x3")
    with pytest.raises(VariableSpaceError):
        VariableSpace(0)


def test_grading(space2, var):
    x1, y1 = var(space2, "x1"), var(space2, "y1")
    p = x1 ** 2 * y1 + y1 ** 3
    assert p.degree() == 3
    assert p.degree("y") == 3
    assert p.degrees("x") == [0, 2]
    assert p.is_homogeneous(3)
    assert not p.is_homogeneous(block="y")
    assert p.truncate("y", 1) == x1 ** 2 * y1
    assert ExactPoly.zero(space2).degree() == -1


def test_exact_divide(space2, var):
    x1, x2 = var(space2, "x1"), var(space2, "x2")
    assert (x1 ** 2 - x2 ** 2).exact_divide(x1 - x2) == x1 + x2
    with pytest.raises(ExactDivisionError):
        x1.exact_divide(x2)
    with pytest.raises(ZeroDivisionError):
        x1.exact_divide(ExactPoly.zero(space2))


def test_substitute(space2, var):
    x1, x2 = var(space2, "x1"), var(space2, "x2")
    p = x1 ** 2 * x2
    swapped = p.substitute({"x1": x2, "x2": x1})
    assert swapped == x2 ** 2 * x1
    assert p.substitute({"x1": x1 + 1, "x2": x2}) == (x1 + 1) ** 2 * x2
    with pytest.raises(VariableSpaceError):
        p.substitute({"x1": x2})


def test_move_block(space1, var):
    x1, y1 = var(space1, "x1"), var(space1, "y1")
    assert move_block(x1 ** 2 + 3, "x", "y", power=2) == y1 ** 4 + 3
    assert move_block(x1, "x", "y") == y1


def test_truncated_product_matches_truncated_full_product(space2, random_poly):
    rng = random.Random(7)
    for _ in range(20):
        a = random_poly(rng, space2)
        b = random_poly(rng, space2)
        for bound in range(4):
            assert truncated_product(a, b, "y", bound) == (a * b).truncate("y", bound)


def test_graded_exp(space1, var):
    y1 = var(space1, "y1")
    expected = 1 + y1 + y1 ** 2 / 2 + y1 ** 3 / 6
    assert graded_exp(y1, "y", 3) == expected
    assert graded_exp(ExactPoly.zero(space1), "y", 4) == 1
    with pytest.raises(VariableSpaceError):
        graded_exp(y1 + 1, "y", 2)


def test_graded_exp_is_multiplicative(space1, var):
    x1, y1 = var(space1, "x1"), var(space1, "y1")
    a, b = x1 * y1, y1 ** 2 * 2
    left = graded_exp(a + b, "y", 5)
    right = truncated_product(graded_exp(a, "y", 5), graded_exp(b, "y", 5), "y", 5)
    assert left == right


def test_power_and_errors(space1, var):
    x1 = var(space1, "x1")
    assert (x1 + 1) ** 0 == 1
    assert (x1 + 1) ** 3 == x1 ** 3 + 3 * x1 ** 2 + 3 * x1 + 1
    with pytest.raises(ValueError):
        x1 ** -1
    with pytest.raises(ZeroDivisionError):
        x1 / 0


def test_truncations_compose(space2, random_poly):
    rng = random.Random(3)
    for _ in range(10):
        p = random_poly(rng, space2)
        for d1 in range(4):
            for d2 in range(4):
                assert p.truncate("y", d1).truncate("y", d2) == p.truncate("y", min(d1, d2))


def test_substitute_folds_blocks(space2, var):
    x1, x2, y1, y2 = (var(space2, name) for name in ("x1", "x2", "y1", "y2"))
    onto_x = {"x1": x1, "x2": x2, "y1": x1, "y2": x2}
    assert (y1 ** 2 * y2).substitute(onto_x) == x1 ** 2 * x2
    assert (x1 + y1).substitute(onto_x) == 2 * x1
    assert (1 + y1 + y1 ** 2).truncate("y", 1) == 1 + y1
    assert (x1 ** 3 * y1).truncate("y", 0).is_zero()


@pytest.mark.parametrize("seed", range(20))
def test_ring_laws(seed, space2, random_poly):
    rng = random.Random(seed)
    p, q, r = (random_poly(rng, space2, max_degree=4, terms=5) for _ in range(3))
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == ExactPoly.zero(space2)
    assert p * ExactPoly.one(space2) == p


@pytest.mark.parametrize("seed", range(15))
def test_substitute_is_a_ring_morphism(seed, space2, random_poly):
    rng = random.Random(seed)
    p, q = (random_poly(rng, space2, max_degree=3, terms=4) for _ in range(2))
    bindings = {name: random_poly(rng, space2, max_degree=2, terms=3) for name in space2.names()}
    assert (p + q).substitute(bindings) == p.substitute(bindings) + q.substitute(bindings)
    assert (p * q).substitute(bindings) == p.substitute(bindings) * q.substitute(bindings)
    assert ExactPoly.one(space2).substitute(bindings) == ExactPoly.one(space2)


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(200))
def test_ring_laws_wide(seed, space3, random_poly):
    rng = random.Random(1000 + seed)
    p, q, r = (random_poly(rng, space3, max_degree=5, terms=6) for _ in range(3))
    assert (p * q) * r == p * (q * r)
    assert p * (q - r) == p * q - p * r
