"""
Exact linear algebra over ints, Fractions and ExactPoly entries.

Determinants use first-row Laplace expansion memoized on the remaining
column set (orders here stay small). Linear solves use Fraction Gaussian
elimination; unitriangular inverses use integer back-substitution.
"""

from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple

Matrix = Sequence[Sequence[Any]]


def determinant(rows: Matrix, one: Any = 1) -> Any:
    """
    Determinant of a square table by first-row expansion.

    `one` is returned for the empty table and seeds the accumulation, so the
    result has the entries' type (e.g. ExactPoly.one(space)).
    """
    order = len(rows)
    for row in rows:
        if len(row) != order:
            raise ValueError(f"determinant needs a square table, got a row of length {len(row)} in order {order}")
    memo: Dict[Tuple[int, ...], Any] = {}

    def expand(depth: int, columns: Tuple[int, ...]) -> Any:
        if not columns:
            return one
        if columns in memo:
            return memo[columns]
        total = one * 0
        for position, col in enumerate(columns):
            entry = rows[depth][col]
            if not entry:
                continue
            minor = expand(depth + 1, columns[:position] + columns[position + 1:])
            term = entry * minor
            total = total - term if position % 2 else total + term
        memo[columns] = total
        return total

    return expand(0, tuple(range(order)))


def identity(order: int) -> List[List[int]]:
    return [[1 if i == j else 0 for j in range(order)] for i in range(order)]


def matmul(a: Matrix, b: Matrix) -> List[List[Any]]:
    inner = len(b)
    return [
        [sum((a[i][k] * b[k][j] for k in range(inner)), 0) for j in range(len(b[0]) if b else 0)]
        for i in range(len(a))
    ]


def invert_unitriangular(upper: Matrix) -> List[List[int]]:
    """
    Inverse of an upper unitriangular integer matrix by back-substitution.

    Raises:
        ValueError: the matrix is not upper unitriangular.
    """
    order = len(upper)
    for i in range(order):
        if upper[i][i] != 1 or any(upper[i][j] for j in range(i)):
            raise ValueError(f"row {i} breaks upper unitriangularity")
    inverse = identity(order)
    # column j of the inverse, solved bottom-up
    for j in range(order):
        for i in range(j - 1, -1, -1):
            inverse[i][j] = -sum(upper[i][k] * inverse[k][j] for k in range(i + 1, j + 1))
    return inverse


def solve_left(matrix: Matrix, rhs: Sequence[Any]) -> List[Fraction]:
    """
    Solve a * matrix = rhs for the row vector a (dense Fraction elimination).

    Raises:
        ValueError: the matrix is singular or not square.
    """
    order = len(matrix)
    if any(len(row) != order for row in matrix) or len(rhs) != order:
        raise ValueError("solve_left needs a square matrix and a matching right-hand side")
    # a * M = b  <=>  M^T a^T = b^T
    aug = [[Fraction(matrix[j][i]) for j in range(order)] + [Fraction(rhs[i])] for i in range(order)]
    for col in range(order):
        pivot = next((r for r in range(col, order) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        lead = aug[col][col]
        aug[col] = [v / lead for v in aug[col]]
        for r in range(order):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [v - factor * p for v, p in zip(aug[r], aug[col])]
    return [aug[i][order] for i in range(order)]
