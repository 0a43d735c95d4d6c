"""Binomial coefficients with the zero-for-negative convention."""

from math import comb


def binom(a: int, b: int) -> int:
    """binom(a, b), defined as 0 when a < 0 or b < 0, and 0 when b > a."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def permutation_sign(perm) -> int:
    """Sign of a permutation of range(len(perm)) given in one-line notation."""
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycle = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            cycle += 1
        if cycle % 2 == 0:
            sign = -sign
    return sign
