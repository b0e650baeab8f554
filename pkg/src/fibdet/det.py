"""Determinants by fraction-free (Bareiss) elimination.

Integer input stays integral throughout: every division in the two-step
update is exact. For non-integer entries (floats, complex numbers,
``Fraction``) the same update is run with true division.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from numbers import Integral
from typing import Any, Sequence, Union

from fibdet.errors import ShapeError
from fibdet.matrices import ExactMatrix

MatrixLike = Union[ExactMatrix, Sequence[Sequence[Any]]]


@dataclass(frozen=True)
class DetResult:
    value: Any
    pivot_trace: list[int] = field(default_factory=list)

    def __int__(self) -> int:
        return int(self.value)


def _rows_of(m: MatrixLike) -> list[list[Any]]:
    rows = [list(r) for r in (m.rows if isinstance(m, ExactMatrix) else m)]
    if any(len(r) != len(rows) for r in rows):
        raise ShapeError(f"determinant needs a square matrix, got {len(rows)} rows "
                         f"of lengths {sorted({len(r) for r in rows})}")
    return rows


def determinant(m: MatrixLike) -> DetResult:
    """Exact determinant of a square matrix.

    Pivoting takes the first nonzero entry at or below the diagonal; each
    row swap flips the sign. ``pivot_trace[s]`` is the row chosen at step s.

    >>> determinant([[1, 1], [1, 2]]).value
    1
    """
    a = _rows_of(m)
    n = len(a)
    if n == 0:
        return DetResult(1, [])
    integral = all(isinstance(x, Integral) for row in a for x in row)
    sign = 1
    prev = 1
    trace = []
    for s in range(n - 1):
        pivot = next((r for r in range(s, n) if a[r][s] != 0), None)
        if pivot is None:
            return DetResult(0, trace)
        trace.append(pivot)
        if pivot != s:
            a[s], a[pivot] = a[pivot], a[s]
            sign = -sign
        p = a[s][s]
        for i in range(s + 1, n):
            ai = a[i]
            lead = ai[s]
            for c in range(s + 1, n):
                num = p * ai[c] - lead * a[s][c]
                ai[c] = num // prev if integral else num / prev
            ai[s] = 0
        prev = p
    trace.append(n - 1)
    return DetResult(sign * a[n - 1][n - 1], trace)


def cofactor_determinant(m: MatrixLike) -> Any:
    """Laplace expansion along the first row. Exponential cost; small n only."""
    a = _rows_of(m)

    def expand(rows: list[list[Any]]) -> Any:
        if not rows:
            return 1
        if len(rows) == 1:
            return rows[0][0]
        total = 0
        for c, x in enumerate(rows[0]):
            if x == 0:
                continue
            minor = [r[:c] + r[c + 1:] for r in rows[1:]]
            term = x * expand(minor)
            total = total - term if c % 2 else total + term
        return total

    return expand(a)
