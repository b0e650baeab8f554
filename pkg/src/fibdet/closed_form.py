"""Closed-form determinant values and the periodicity / vanishing sweeps."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Optional

from fibdet.errors import AnalysisError, ParameterError
from fibdet.recurrence import Params


@dataclass(frozen=True)
class CaseLabel:
    """Which branch of the closed form applies to (k, l).

    ``tag`` is ``"A"`` when l - 1 = alpha*k, ``"B"`` when l - 2 = beta*k
    (beta = 0 allowed), in both cases with gcd(l, k-1) = 1; otherwise
    ``"zero"``. ``sign_exponent`` is ``None`` for the zero case.
    """

    tag: str
    multiplier: Optional[int] = None
    sign_exponent: Optional[int] = None

    @property
    def value(self) -> int:
        if self.tag == "zero":
            return 0
        return -1 if self.sign_exponent % 2 else 1

    def __str__(self) -> str:
        if self.tag == "A":
            return f"A(alpha={self.multiplier})"
        if self.tag == "B":
            return f"B(beta={self.multiplier})"
        return "zero"


def _triangular_exponent(p: Params) -> int:
    s = p.k + p.ell
    prod = s * (s - 1)
    assert prod % 2 == 0
    return prod // 2


def classify(p: Params) -> CaseLabel:
    k, ell = p.k, p.ell
    if gcd(ell, k - 1) != 1:
        return CaseLabel("zero")
    if (ell - 1) % k == 0:
        return CaseLabel("A", (ell - 1) // k, _triangular_exponent(p) + 1)
    if (ell - 2) % k == 0:
        return CaseLabel("B", (ell - 2) // k, _triangular_exponent(p))
    return CaseLabel("zero")


def _shift_sign(p: Params, j: int) -> int:
    if isinstance(j, bool) or not isinstance(j, int) or j < 0:
        raise ParameterError(f"j must be a nonnegative integer, got {j!r}")
    return -1 if (j * (p.k + p.ell - 2)) % 2 else 1


def closed_det_tilde(p: Params, j: int) -> int:
    """det A~_{j,k,l} = (-1)^(j(k+l-2)) det A~_{0,k,l}."""
    return _shift_sign(p, j) * classify(p).value


def closed_det_original(p: Params, j: int) -> int:
    """det A_{j,k,l}, via A_{j,k,l} = A~_{j+k+1,k,l}."""
    _shift_sign(p, j)
    return closed_det_tilde(p, j + p.k + 1)


def miles_closed(k: int, n: int) -> int:
    """Sign (-1)^((2n+k)(k-1)/2) of Miles' k x k Hankel determinant."""
    if isinstance(k, bool) or not isinstance(k, int) or k < 2:
        raise ParameterError(f"k must be an integer >= 2, got {k!r}")
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ParameterError(f"n must be a nonnegative integer, got {n!r}")
    prod = (2 * n + k) * (k - 1)
    assert prod % 2 == 0
    return -1 if (prod // 2) % 2 else 1


def radical(n: int) -> int:
    """Product of the distinct primes dividing n.

    >>> radical(12)
    6
    """
    if isinstance(n, bool) or not isinstance(n, int) or n <= 0:
        raise ParameterError(f"radical needs a positive integer, got {n!r}")
    rad = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            rad *= d
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        rad *= n
    return rad


def minimal_period(values: list[int], limit: int) -> Optional[int]:
    """Smallest p <= limit with values[i] == values[i+p] across the window."""
    for p in range(1, min(limit, len(values)) + 1):
        if all(values[i] == values[i + p] for i in range(len(values) - p)):
            return p
    return None


@dataclass(frozen=True)
class PeriodReport:
    k0: int
    observed_values: list[int]
    period: Optional[int]
    bound: int
    divides_bound: bool


def alpha_period_analysis(k0: int, l_max: int) -> PeriodReport:
    """Period of l -> |det A~_{0,k0,l}| for l = 2..l_max.

    The window must cover three candidate periods of length
    k0 * rad(k0 - 1), otherwise :class:`AnalysisError` is raised.
    """
    if isinstance(k0, bool) or not isinstance(k0, int) or k0 < 2:
        raise ParameterError(f"k0 must be an integer >= 2, got {k0!r}")
    bound = k0 * radical(k0 - 1)
    needed = 2 + 3 * bound
    if l_max < needed:
        raise AnalysisError(
            f"l_max={l_max} is too small for k0={k0}; use l_max >= {needed}"
        )
    values = [abs(closed_det_tilde(Params(k0, ell), 0)) for ell in range(2, l_max + 1)]
    period = minimal_period(values, bound)
    return PeriodReport(
        k0=k0,
        observed_values=values,
        period=period,
        bound=bound,
        divides_bound=period is not None and bound % period == 0,
    )


@dataclass(frozen=True)
class TailReport:
    l0: int
    values: list[int] = field(default_factory=list)
    tail_zero_from: Optional[int] = None

    def nonzero_ks(self) -> list[int]:
        return [k for k, v in enumerate(self.values, start=2) if v]


def beta_tail_analysis(l0: int, k_max: int) -> TailReport:
    """Values k -> |det A~_{0,k,l0}| for k = 2..k_max and where they die out.

    ``tail_zero_from`` is the least K with every value zero for K <= k <= k_max,
    or ``None`` when the value at k_max is nonzero.
    """
    if isinstance(l0, bool) or not isinstance(l0, int) or l0 < 2:
        raise ParameterError(f"l0 must be an integer >= 2, got {l0!r}")
    if k_max < l0 + 5:
        raise AnalysisError(f"k_max={k_max} is too small for l0={l0}; use k_max >= {l0 + 5}")
    values = [abs(closed_det_tilde(Params(k, l0), 0)) for k in range(2, k_max + 1)]
    tail = None
    for k in range(k_max, 1, -1):
        if values[k - 2]:
            break
        tail = k
    return TailReport(l0, values, tail)
