"""The three matrix families: A~_{j,k,l}, A_{j,k,l} and Miles' k x k matrix.

Indices here are 0-based. For the dying-rabbit families the first column
holds C_{j}, ..., C_{j+k+l-2}; the remaining columns form a Hankel block
starting at C_{j+l}, so there is a gap of l between column 0 and column 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from fibdet.errors import ParameterError, ShapeError
from fibdet.recurrence import Params, miles_sequence, original_sequence, tilde_sequence


@dataclass(frozen=True)
class ExactMatrix:
    """Square integer matrix plus the recipe that produced it.

    ``kind`` is one of ``"tilde"``, ``"original"``, ``"miles"`` or
    ``"custom"``; ``j`` is the shift and ``params`` the (k, l) pair, or
    ``None`` for Miles and custom matrices.
    """

    rows: tuple[tuple[int, ...], ...]
    kind: str = "custom"
    j: int = 0
    params: Optional[Params] = None

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if any(len(r) != len(rows) for r in rows):
            raise ShapeError("matrix must be square")

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, c = index
        return self.rows[i][c]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(tuple(zip(*self.rows)), self.kind, self.j, self.params)


def _dying_rabbit_index(i: int, c: int, j: int, ell: int) -> int:
    return j + i if c == 0 else j + i + ell + c - 1


def _check_shift(j: int) -> None:
    if isinstance(j, bool) or not isinstance(j, int) or j < 0:
        raise ParameterError(f"j must be a nonnegative integer, got {j!r}")


def _dying_rabbit_matrix(seq: list[int], p: Params, j: int, kind: str) -> ExactMatrix:
    d = p.dim
    rows = tuple(
        tuple(seq[_dying_rabbit_index(i, c, j, p.ell)] for c in range(d))
        for i in range(d)
    )
    return ExactMatrix(rows, kind, j, p)


def _needed_terms(p: Params, j: int) -> int:
    # bottom-right entry sits at j + 2k + 3l - 5
    return j + 2 * p.k + 3 * p.ell - 4


def build_tilde_matrix(p: Params, j: int) -> ExactMatrix:
    """A~_{j,k,l}, built from C~_n."""
    _check_shift(j)
    return _dying_rabbit_matrix(tilde_sequence(p, _needed_terms(p, j)), p, j, "tilde")


def build_original_matrix(p: Params, j: int) -> ExactMatrix:
    """A_{j,k,l}, built from C_n; equal to A~_{j+k+1,k,l}."""
    _check_shift(j)
    return _dying_rabbit_matrix(
        original_sequence(p, _needed_terms(p, j)), p, j, "original"
    )


def build_miles_matrix(k: int, n: int) -> ExactMatrix:
    """k x k Hankel matrix with entry (i, c) = f^(k)_{n+i+c}."""
    _check_shift(n)
    f = miles_sequence(k, n + 2 * k - 1)
    rows = tuple(tuple(f[n + i + c] for c in range(k)) for i in range(k))
    return ExactMatrix(rows, "miles", n, None)


def reference_index(m: ExactMatrix, i: int, c: int) -> int:
    """Sequence index of entry (i, c) of a built matrix."""
    if m.kind == "miles":
        return m.j + i + c
    if m.kind in ("tilde", "original"):
        return _dying_rabbit_index(i, c, m.j, m.params.ell)
    raise ValueError(f"no construction rule for kind {m.kind!r}")
