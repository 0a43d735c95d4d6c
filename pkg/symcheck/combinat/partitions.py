"""
Partitions - canonical integer partitions and index sequences.

A partition is a plain tuple of positive integers in weakly decreasing
order; the empty tuple is the empty partition. Index sequences (compositions,
the u and v tuples of the A_n sums) are plain tuples of non-negative integers
and keep their zeros, since formulas index them by position.

Serialized form is the bracket literal used on the command line and in
reports: [2,1] for (2,1) and [] for the empty partition.
"""

import re
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

PartitionSeq = Tuple[int, ...]
IndexSeq = Tuple[int, ...]

EMPTY: PartitionSeq = ()

_LITERAL = re.compile(r"^\[\s*(\d+(\s*,\s*\d+)*)?\s*\]$")


class PartitionError(ValueError):
    """A sequence violates a partition or index-sequence precondition."""


class SignedSort(NamedTuple):
    """Strictly decreasing rearrangement of an A_n member and the sign of the sorting permutation."""
    sorted: IndexSeq
    sign: int


def make_partition(seq: Iterable[int]) -> PartitionSeq:
    """
    Canonicalize a sequence of non-negative integers into a partition.

    Zero parts are dropped wherever they occur; the remaining parts must
    already be weakly decreasing.

    Raises:
        PartitionError: on a negative part or an increase between parts.
    """
    parts = tuple(int(p) for p in seq)
    for p in parts:
        if p < 0:
            raise PartitionError(f"negative part {p} in {list(parts)}")
    stripped = tuple(p for p in parts if p != 0)
    for a, b in zip(stripped, stripped[1:]):
        if a < b:
            raise PartitionError(f"{list(parts)} is not weakly decreasing")
    return stripped


def multiplicity(lam: PartitionSeq, i: int) -> int:
    """m_i(lam): number of parts equal to i."""
    return sum(1 for p in lam if p == i)


def multiplicities(lam: PartitionSeq) -> Dict[int, int]:
    counts: Dict[int, int] = {}
    for p in lam:
        counts[p] = counts.get(p, 0) + 1
    return counts


def conjugate(lam: PartitionSeq) -> PartitionSeq:
    """Transpose of the Young diagram: lam'_j = #{i : lam_i >= j}."""
    if not lam:
        return EMPTY
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def union(lam: PartitionSeq, mu: PartitionSeq) -> PartitionSeq:
    """Multiset union of parts, so that m_i(lam U mu) = m_i(lam) + m_i(mu)."""
    return tuple(sorted(lam + mu, reverse=True))


def pad(lam: Sequence[int], n: int) -> IndexSeq:
    """Right-pad with zeros to length n."""
    if len(lam) > n:
        raise PartitionError(f"{render(lam)} has more than {n} parts")
    return tuple(lam) + (0,) * (n - len(lam))


def scale_add(lam: PartitionSeq, c: int, mu: PartitionSeq, n: int) -> PartitionSeq:
    """
    Part-wise c*lam + mu over n slots.

    Both arguments are zero-padded to length n before the arithmetic and the
    result is canonicalized, so scale_add((), 2, (1,), 2) is (1,).

    Raises:
        PartitionError: if either argument has more than n parts.
    """
    if c < 1:
        raise PartitionError(f"scale factor must be positive, got {c}")
    a = pad(lam, n)
    b = pad(mu, n)
    return make_partition(c * x + y for x, y in zip(a, b))


def staircase(n: int, kind: str) -> PartitionSeq:
    """Delta_n = (n, ..., 1) for kind 'big'; delta_n = (n-1, ..., 1) for kind 'small'."""
    if kind == "big":
        return tuple(range(n, 0, -1))
    if kind == "small":
        return tuple(range(n - 1, 0, -1))
    raise ValueError(f"unknown staircase kind '{kind}' (expected 'big' or 'small')")


def contains(lam: PartitionSeq, mu: PartitionSeq) -> bool:
    """True when the diagram of mu fits inside the diagram of lam."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def dominates(lam: PartitionSeq, mu: PartitionSeq) -> bool:
    """Dominance order lam >= mu on partitions of the same weight."""
    if sum(lam) != sum(mu):
        return False
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def _descend(remaining: int, largest: int, slots: int) -> Iterator[PartitionSeq]:
    if remaining == 0:
        yield EMPTY
        return
    if slots == 0:
        return
    for first in range(min(remaining, largest), 0, -1):
        for rest in _descend(remaining - first, first, slots - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_partitions(
    total: int,
    max_length: Optional[int] = None,
    max_part: Optional[int] = None,
) -> Tuple[PartitionSeq, ...]:
    """
    All partitions of `total` with at most `max_length` parts, each part at
    most `max_part`, in descending lexicographic order. None means unbounded.
    """
    if total < 0:
        raise PartitionError(f"weight must be non-negative, got {total}")
    slots = total if max_length is None else max_length
    largest = total if max_part is None else max_part
    if slots < 0 or largest < 0:
        raise PartitionError("enumeration bounds must be non-negative")
    return tuple(_descend(total, largest, slots))


def partitions_up_to(
    max_weight: int,
    max_length: Optional[int] = None,
    max_part: Optional[int] = None,
) -> List[PartitionSeq]:
    """Concatenation of the weight blocks 0..max_weight."""
    out: List[PartitionSeq] = []
    for w in range(max_weight + 1):
        out.extend(enumerate_partitions(w, max_length, max_part))
    return out


def is_distinct(u: IndexSeq) -> bool:
    """A_n membership: all entries pairwise distinct."""
    return len(set(u)) == len(u)


def sort_with_sign(u: IndexSeq) -> SignedSort:
    """
    Sort an A_n member into strictly decreasing order.

    The sign is sgn(tau_u) for the unique tau_u with
    u[tau(n)] < ... < u[tau(1)], i.e. (-1) to the number of pairs i < j
    with u_i < u_j.

    Raises:
        PartitionError: on repeated entries (u is not in A_n).
    """
    if not is_distinct(u):
        raise PartitionError(f"{render(u)} has repeated entries and is not in A_{len(u)}")
    inversions = sum(1 for i in range(len(u)) for j in range(i + 1, len(u)) if u[i] < u[j])
    return SignedSort(tuple(sorted(u, reverse=True)), -1 if inversions % 2 else 1)


def compositions(total: int, slots: int) -> Iterator[IndexSeq]:
    """Tuples of `slots` non-negative integers summing to `total`, in descending lex order."""
    if slots == 0:
        if total == 0:
            yield ()
        return
    if slots == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, slots - 1):
            yield (first,) + rest


def enumerate_A_window(n: int, total: int) -> Iterator[IndexSeq]:
    """Members of A_n with entry sum `total`, descending lex."""
    return (u for u in compositions(total, n) if is_distinct(u))


def splits(xi: PartitionSeq) -> List[Tuple[PartitionSeq, PartitionSeq]]:
    """
    Every ordered pair (eta, zeta) with eta U zeta = xi, each exactly once.

    Enumerated multiplicity-wise over the distinct parts of xi, largest part
    first, so there are prod_i (m_i(xi) + 1) pairs.
    """
    counts = multiplicities(xi)
    values = sorted(counts, reverse=True)
    out = []
    for taken in product(*(range(counts[v] + 1) for v in values)):
        eta: List[int] = []
        zeta: List[int] = []
        for v, k in zip(values, taken):
            eta.extend([v] * k)
            zeta.extend([v] * (counts[v] - k))
        out.append((tuple(eta), tuple(zeta)))
    return out


def render(seq: Sequence[int]) -> str:
    return "[" + ",".join(str(p) for p in seq) + "]"


def parse_partition(text: str) -> PartitionSeq:
    """
    Parse a bracket literal such as '[2,1]' or '[]'.

    Raises:
        PartitionError: on a malformed literal or a non-partition.
    """
    match = _LITERAL.match(text.strip())
    if not match:
        raise PartitionError(f"malformed partition literal '{text}' (expected e.g. [2,1])")
    body = text.strip()[1:-1].strip()
    parts = [int(p) for p in body.split(",")] if body else []
    return make_partition(parts)
