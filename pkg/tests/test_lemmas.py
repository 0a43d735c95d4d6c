import pytest

from symcheck.engine.lemmas import (
    QXX_IDENTITIES,
    binomial_rhs,
    check_alternating_convolution,
    check_binomial,
    check_doubled_substitution,
    check_er_formula,
    check_kostka_round_trip,
    check_qxx_lemma,
)


@pytest.mark.parametrize("identity_name", QXX_IDENTITIES)
def test_qxx_lemma(identity_name):
    for u in range(5):
        for n in (1, 2):
            report = check_qxx_lemma(identity_name, u, n)
            assert report.status == "pass"
            assert report.params["identity"] == identity_name


def test_qxx_lemma_rejects():
    with pytest.raises(ValueError):
        check_qxx_lemma("even_odd", 1, 1)
    with pytest.raises(ValueError):
        check_qxx_lemma("even_even", -1, 1)


def test_alternating_convolution():
    for r in range(1, 7):
        assert check_alternating_convolution(r, 2).status == "pass"
    with pytest.raises(ValueError):
        check_alternating_convolution(0, 2)


def test_doubled_substitution():
    for r in range(5):
        for n in (1, 2):
            assert check_doubled_substitution(r, n).status == "pass"


def test_binomial_split():
    assert binomial_rhs(2, 1, 1) == 2
    assert binomial_rhs(3, 2, 2) == 3
    for n in range(7):
        for m in range(7):
            for k in range(n + m + 1):
                assert check_binomial(n, m, k).status == "pass", (n, m, k)


@pytest.mark.parametrize("n, m, k", [(2, 1, 4), (1, 1, -1), (-1, 2, 0)])
def test_binomial_rejects(n, m, k):
    with pytest.raises(ValueError):
        check_binomial(n, m, k)


def test_er_formula_and_round_trip():
    for w in range(9):
        assert check_er_formula(w).status == "pass"
    for w in range(7):
        assert check_kostka_round_trip(w).status == "pass"
    assert check_er_formula(3).params == {"weight": "3"}
