"""Exact integer generators for the sequences used throughout the package.

All generators iterate forward from their initial values, so every term is
an exact Python ``int``.
"""

from __future__ import annotations

from dataclasses import dataclass

from fibdet.errors import ParameterError


@dataclass(frozen=True)
class Params:
    """The pair (k, l) fixing the recurrence C_n = C_{n-l} + ... + C_{n-k-l+1}.

    ``l`` is the maturation delay and ``k`` the lifetime after maturity.
    Both must be at least 2.
    """

    k: int
    ell: int

    def __post_init__(self):
        for name, value in (("k", self.k), ("ell", self.ell)):
            if isinstance(value, bool) or not isinstance(value, int):
                raise ParameterError(f"{name} must be an integer, got {value!r}")
            if value < 2:
                raise ParameterError(f"{name} must be >= 2, got {value}")

    @property
    def dim(self) -> int:
        """Recurrence order and matrix dimension, k + l - 1."""
        return self.k + self.ell - 1


def _check_count(count: int) -> None:
    if isinstance(count, bool) or not isinstance(count, int) or count < 0:
        raise ParameterError(f"count must be a nonnegative integer, got {count!r}")


def _extend(values: list[int], p: Params, count: int) -> list[int]:
    # Sliding window sum of C_{n-l} .. C_{n-k-l+1}; the window always has k terms.
    k, ell = p.k, p.ell
    n = len(values)
    if n < count:
        window = sum(values[n - ell - t] for t in range(k))
        while n < count:
            values.append(window)
            n += 1
            # advance the window to n: add C_{n-l}, drop C_{n-l-k}
            window += values[n - ell] - values[n - ell - k]
    return values[:count]


def tilde_sequence(p: Params, count: int) -> list[int]:
    """First ``count`` terms of C~_n^(k,l).

    Initial values are C~_0 = 1, C~_1 = ... = C~_{k-1} = 0 and
    C~_k = ... = C~_{k+l-2} = 1; the main recurrence applies from n = k+l-1.

    >>> tilde_sequence(Params(2, 2), 8)
    [1, 0, 1, 1, 1, 2, 2, 3]
    """
    _check_count(count)
    initial = [1] + [0] * (p.k - 1) + [1] * (p.ell - 1)
    return _extend(initial, p, count)


def original_sequence(p: Params, count: int) -> list[int]:
    """First ``count`` terms of C_n^(k,l) under the rabbit-pair start.

    C_0 = ... = C_{l-1} = 1, then C_n = C_{n-1} + C_{n-l} up to n = k+l-2,
    then the main recurrence. Agrees with ``tilde_sequence`` shifted by k+1.
    """
    _check_count(count)
    k, ell = p.k, p.ell
    initial = [1] * ell
    for n in range(ell, k + ell - 1):
        initial.append(initial[n - 1] + initial[n - ell])
    return _extend(initial, p, count)


def miles_sequence(k: int, count: int) -> list[int]:
    """Miles' k-generalized Fibonacci numbers f_n^(k).

    f_0 = ... = f_{k-2} = 0, f_{k-1} = 1, and f_n = f_{n-1} + ... + f_{n-k}.
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 2:
        raise ParameterError(f"k must be an integer >= 2, got {k!r}")
    _check_count(count)
    values = [0] * (k - 1) + [1]
    window = 1
    while len(values) < count:
        values.append(window)
        window = 2 * window - values[-k - 1]
    return values[:count]


def classic_fibonacci(count: int) -> list[int]:
    """Fibonacci numbers with f_0 = f_1 = 1."""
    _check_count(count)
    values = []
    a, b = 1, 1
    for _ in range(count):
        values.append(a)
        a, b = b, a + b
    return values
