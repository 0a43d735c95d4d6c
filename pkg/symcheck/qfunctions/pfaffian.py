"""
Pfaffians of skew tables with polynomial entries.

Expansion is along the first remaining row: pairing the first index with
each later index in turn, with memoization on the remaining index set.
"""

from dataclasses import dataclass
from typing import Dict, Mapping, Sequence, Tuple

from symcheck.poly.exact_poly import ExactPoly, VariableSpace


@dataclass(frozen=True)
class SkewTable:
    """Square table of ExactPoly entries, antisymmetric with zero diagonal."""
    space: VariableSpace
    order: int
    entries: Tuple[Tuple[ExactPoly, ...], ...]

    @classmethod
    def from_upper(cls, space: VariableSpace, order: int, upper: Mapping[Tuple[int, int], ExactPoly]) -> "SkewTable":
        """Build from the strict upper triangle {(i, j): a_ij, i < j}; missing entries are zero."""
        zero = ExactPoly.zero(space)
        rows = [[zero] * order for _ in range(order)]
        for (i, j), value in upper.items():
            if not i < j:
                raise ValueError(f"upper-triangle entry ({i},{j}) needs i < j")
            rows[i][j] = value
            rows[j][i] = -value
        return cls(space, order, tuple(tuple(r) for r in rows))

    @classmethod
    def from_rows(cls, space: VariableSpace, rows: Sequence[Sequence[object]]) -> "SkewTable":
        """Wrap a nested table, lifting int and Fraction entries to constants."""
        lifted = tuple(
            tuple(v if isinstance(v, ExactPoly) else ExactPoly.constant(space, v) for v in row) for row in rows
        )
        return cls(space, len(lifted), lifted)

    def is_skew(self) -> bool:
        for i in range(self.order):
            if len(self.entries[i]) != self.order or not self.entries[i][i].is_zero():
                return False
            for j in range(i + 1, self.order):
                if self.entries[i][j] != -self.entries[j][i]:
                    return False
        return True


def pfaffian(table: SkewTable) -> ExactPoly:
    """
    Pf(M) by first-row expansion; the order-0 Pfaffian is 1.

    Raises:
        ValueError: odd order, or the table is not antisymmetric.
    """
    if table.order % 2:
        raise ValueError(f"Pfaffian needs an even order, got {table.order}")
    if not table.is_skew():
        raise ValueError("Pfaffian needs an antisymmetric table with zero diagonal")
    rows = table.entries
    memo: Dict[Tuple[int, ...], ExactPoly] = {}

    def expand(indices: Tuple[int, ...]) -> ExactPoly:
        if not indices:
            return ExactPoly.one(table.space)
        if indices in memo:
            return memo[indices]
        first, rest = indices[0], indices[1:]
        total = ExactPoly.zero(table.space)
        for k, partner in enumerate(rest):
            entry = rows[first][partner]
            if entry.is_zero():
                continue
            term = entry * expand(rest[:k] + rest[k + 1:])
            # partner at offset k+1 in indices: sign (-1)^k
            total = total - term if k % 2 else total + term
        memo[indices] = total
        return total

    return expand(tuple(range(table.order)))
