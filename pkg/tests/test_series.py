import random
from fractions import Fraction

import pytest

from symcheck.engine.series import (
    cauchy_product,
    check_cauchy,
    check_defining_relation,
    check_phi,
    defining_relation_base,
    exp_series,
    in_y_squared,
    odd_power_kernel,
    phi_series,
    te_to,
    y_product,
)


def test_parity_parts(space2, var):
    x1, y1, y2 = var(space2, "x1"), var(space2, "y1"), var(space2, "y2")
    f = y1 ** 2 + y1 * y2 + x1 + y1 ** 3
    assert te_to(f, "even") == y1 ** 2 + x1
    assert te_to(f, "odd") == y1 * y2
    with pytest.raises(ValueError):
        te_to(f, "both")


def test_block_helpers(space2, var):
    x1, x2, y1, y2 = (var(space2, name) for name in ("x1", "x2", "y1", "y2"))
    assert y_product(2) == y1 * y2
    assert in_y_squared(x1 + x2) == y1 ** 2 + y2 ** 2


def test_kernel_and_exp(space1, var):
    x1, y1 = var(space1, "x1"), var(space1, "y1")
    assert odd_power_kernel(1, 3) == 2 * x1 * y1 + (x1 * y1) ** 3 * Fraction(2, 3)
    assert exp_series(1, 2) == 1 + 2 * x1 * y1 + 2 * x1 ** 2 * y1 ** 2
    assert cauchy_product(1, 2) == exp_series(1, 2)


def test_phi_series_lowest_terms(space1, var):
    x1, y1 = var(space1, "x1"), var(space1, "y1")
    assert phi_series(1, "plus", 0).numerator == 1
    assert phi_series(1, "plus", 0).denominator == 1
    assert phi_series(1, "minus", 1).numerator == 2 * x1 * y1


def test_phi_series_bounds():
    with pytest.raises(ValueError):
        phi_series(2, "plus", 1)
    with pytest.raises(ValueError):
        phi_series(1, "sideways", 2)


@pytest.mark.parametrize("n, sign, degree", [(1, "plus", 6), (1, "minus", 7), (2, "plus", 6), (2, "minus", 5)])
def test_phi_expansion(n, sign, degree):
    report = check_phi(n, sign, degree)
    assert report.status == "pass", report.witness
    assert report.params == {"n": str(n), "sign": sign, "D": str(degree)}


@pytest.mark.parametrize("n, degree", [(1, 6), (2, 4)])
def test_cauchy(n, degree):
    assert check_cauchy(n, degree).status == "pass"


def test_defining_relation_base():
    assert defining_relation_base(1, "even") == 2
    assert defining_relation_base(2, "even") == 8
    assert defining_relation_base(1, "odd") == 1
    assert defining_relation_base(2, "odd") == 6


@pytest.mark.parametrize(
    "n, variant, extra",
    [(1, "even", 6), (1, "odd", 0), (1, "odd", 3), (1, "odd", 6), (2, "even", 2), (2, "odd", 0), (2, "odd", 2)],
)
def test_defining_relation(n, variant, extra):
    degree = defining_relation_base(n, variant) + extra
    report = check_defining_relation(n, variant, degree)
    assert report.status == "pass", report.witness


def test_defining_relation_needs_lowest_term():
    with pytest.raises(ValueError):
        check_defining_relation(1, "even", 1)
    with pytest.raises(ValueError):
        check_defining_relation(2, "odd", 5)


def test_odd_relation_lowest_term(space1, var):
    # TE(..) TO(..) starts at y1 * g_empty = y1 * S_(1)(x) = 2*x1*y1
    assert check_defining_relation(1, "odd", 1).status == "pass"
    x1, y1 = var(space1, "x1"), var(space1, "y1")
    assert phi_series(1, "plus", 1).numerator * phi_series(1, "minus", 1).numerator == 2 * x1 * y1


def test_odd_relation_at_shallow_depth():
    report = check_defining_relation(1, "odd", 4)
    assert report.status == "pass", report.witness
    assert report.params == {"n": "1", "variant": "odd", "D": "4"}


@pytest.mark.slow
@pytest.mark.parametrize("variant", ["even", "odd"])
def test_defining_relation_default_depth(variant):
    degree = defining_relation_base(2, variant) + 6
    assert check_defining_relation(2, variant, degree).status == "pass"


@pytest.mark.parametrize("seed", range(10))
def test_parity_projections(seed, space2, random_poly):
    rng = random.Random(seed)
    f = random_poly(rng, space2, max_degree=6, terms=10)
    even, odd = te_to(f, "even"), te_to(f, "odd")
    assert te_to(even, "even") == even
    assert te_to(odd, "odd") == odd
    assert te_to(even, "odd").is_zero()
    assert te_to(odd, "even").is_zero()


@pytest.mark.parametrize("seed", range(10))
def test_parity_projections_commute_with_even_factors(seed, space2, random_poly):
    rng = random.Random(seed)
    f = random_poly(rng, space2, max_degree=5, terms=8)
    g = te_to(random_poly(rng, space2, max_degree=4, terms=5), "even")
    for kind in ("even", "odd"):
        assert te_to(g * f, kind) == g * te_to(f, kind)
