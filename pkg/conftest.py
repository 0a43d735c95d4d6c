"""Shared pytest configuration and fixtures."""

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from symcheck.poly.exact_poly import ExactPoly, VariableSpace  # noqa: E402


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: acceptance-size sweeps")


@pytest.fixture
def space1():
    return VariableSpace(1)


@pytest.fixture
def space2():
    return VariableSpace(2)


@pytest.fixture
def space3():
    return VariableSpace(3)


@pytest.fixture
def var():
    """var(space, 'x1') shortcut."""
    return ExactPoly.var


@pytest.fixture
def random_poly():
    """Random polynomial over both blocks with small integer coefficients."""

    def build(rng, space, max_degree=6, terms=6):
        out = {}
        for _ in range(terms):
            key = [0] * space.size
            for _ in range(rng.randint(0, max_degree)):
                key[rng.randrange(space.size)] += 1
            out[tuple(key)] = out.get(tuple(key), 0) + rng.randint(-3, 3)
        return ExactPoly(space, out)

    return build
