"""
Kostka Tables - Kostka numbers, weight blocks and their exact inverses.

Kostka numbers K_(lam,mu) count semistandard fillings of shape lam with
content mu; they are computed by peeling horizontal strips, never by
building tableaux. A weight block is indexed by partitions of one weight in
descending lexicographic order, which refines dominance, so every block is
upper unitriangular and inverts by integer back-substitution.

Blocks can be restricted by length (l <= n, an up-set in dominance) and by
largest part (a down-set). Both restrictions are intervals-closed, so the
inverse of a restricted block is the restriction of the full inverse.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple

from symcheck.combinat.counting import binom
from symcheck.combinat.partitions import (
    PartitionSeq,
    dominates,
    enumerate_partitions,
    multiplicity,
    render,
)
from symcheck.poly.linalg import identity, invert_unitriangular, matmul

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeightBlockTable:
    """Square table over the partitions of one weight (descending lex index)."""
    kind: str
    weight: int
    n: int
    index: Tuple[PartitionSeq, ...]
    entries: Tuple[Tuple[int, ...], ...]
    max_part: Optional[int] = None

    def position(self, lam: PartitionSeq) -> Optional[int]:
        try:
            return self.index.index(lam)
        except ValueError:
            return None

    def entry(self, lam: PartitionSeq, mu: PartitionSeq) -> int:
        """Entry at (lam, mu); 0 when either is outside the index."""
        i = self.position(lam)
        j = self.position(mu)
        if i is None or j is None:
            return 0
        return self.entries[i][j]

    def rows(self) -> List[List[int]]:
        return [list(row) for row in self.entries]

    def render_rows(self) -> str:
        return "[" + ",".join("[" + ",".join(str(v) for v in row) + "]" for row in self.entries) + "]"


def _horizontal_strips(lam: PartitionSeq, size: int) -> Iterator[PartitionSeq]:
    """All nu inside lam with lam/nu a horizontal strip of `size` boxes."""
    parts = list(lam)

    def walk(i: int, left: int, acc: List[int]) -> Iterator[PartitionSeq]:
        if i == len(parts):
            if left == 0:
                yield tuple(p for p in acc if p)
            return
        lower = parts[i + 1] if i + 1 < len(parts) else 0
        for nu_i in range(parts[i], lower - 1, -1):
            taken = parts[i] - nu_i
            if taken > left:
                break
            yield from walk(i + 1, left - taken, acc + [nu_i])

    yield from walk(0, size, [])


@lru_cache(maxsize=None)
def kostka_number(lam: PartitionSeq, mu: PartitionSeq) -> int:
    """
    K_(lam,mu) by the branching rule: remove the last part of mu as a
    horizontal strip from lam in every possible way.
    """
    if sum(lam) != sum(mu):
        return 0
    if not mu:
        return 1 if not lam else 0
    if not dominates(lam, tuple(sorted(mu, reverse=True))):
        return 0
    last = mu[-1]
    rest = mu[:-1]
    return sum(kostka_number(nu, rest) for nu in _horizontal_strips(lam, last))


@lru_cache(maxsize=None)
def kostka_block(w: int, n: int, max_part: Optional[int] = None) -> WeightBlockTable:
    """K over the partitions of w with at most n parts (and parts <= max_part if given)."""
    if w < 0:
        raise ValueError(f"weight must be non-negative, got {w}")
    index = enumerate_partitions(w, max_length=n, max_part=max_part)
    entries = tuple(tuple(kostka_number(lam, mu) for mu in index) for lam in index)
    logger.debug(f"Kostka block w={w} n={n} max_part={max_part}: {len(index)} partitions")
    return WeightBlockTable("kostka", w, n, index, entries, max_part)


@lru_cache(maxsize=None)
def inverse_kostka_block(w: int, n: int, max_part: Optional[int] = None) -> WeightBlockTable:
    """
    Exact inverse of kostka_block(w, n, max_part); K * K^-1 = I is checked here.

    Raises:
        ArithmeticError: the product check failed.
    """
    block = kostka_block(w, n, max_part)
    inverse = invert_unitriangular(block.entries)
    if matmul(block.entries, inverse) != identity(len(block.index)):
        raise ArithmeticError(f"K * K^-1 != I on weight block w={w} n={n}")
    return WeightBlockTable(
        "inverse_kostka", w, n, block.index, tuple(tuple(row) for row in inverse), max_part
    )


def inverse_kostka(lam: PartitionSeq, mu: PartitionSeq) -> int:
    """
    Entry K^-1_(lam,mu) of the inverse of the full Kostka matrix.

    Read from the block of weight |lam| with parts <= lam_1 and no length
    bound; zero on a weight mismatch or when mu_1 > lam_1.
    """
    w = sum(lam)
    if w != sum(mu):
        return 0
    if not lam:
        return 1
    if mu[0] > lam[0]:
        return 0
    return inverse_kostka_block(w, w, lam[0]).entry(lam, mu)


def inverse_kostka_er2(lam: PartitionSeq, mu: PartitionSeq) -> Optional[int]:
    """
    Closed form for K^-1_(lam,mu) when both partitions have parts <= 2:
    (-1)^(m2(lam) - m2(mu)) * binom(l(lam) - m2(mu), m1(lam)).

    Returns None (not applicable) on a part > 2 or a weight mismatch.
    """
    if any(p > 2 for p in lam + mu) or sum(lam) != sum(mu):
        return None
    m2_lam = multiplicity(lam, 2)
    m2_mu = multiplicity(mu, 2)
    sign = -1 if (m2_lam - m2_mu) % 2 else 1
    return sign * binom(len(lam) - m2_mu, multiplicity(lam, 1))


def describe_block(table: WeightBlockTable) -> Dict[str, object]:
    return {
        "kind": table.kind,
        "weight": table.weight,
        "n": table.n,
        "index": [render(p) for p in table.index],
        "entries": [[str(v) for v in row] for row in table.entries],
    }
