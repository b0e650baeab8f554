"""Numeric checks of the closed-form derivation.

The roots r_i of g(x) = x^(k+l-1) - (1 + x + ... + x^(k-1)) drive a Binet
formula for C~_n. Products over the roots, the complete homogeneous
symmetric functions h_m of their reciprocals and a root-of-unity product
combine into det A~_{0,k,l}; every factor is evaluated here in double
precision so it can be compared with the exact integer side.

The integer power series of 1 / prod(1 - x / r_i) is computed exactly.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from fibdet.det import determinant
from fibdet.errors import ConvergenceError, ParameterError
from fibdet.recurrence import Params, tilde_sequence

MAX_ITERATIONS = 500
STEP_TOLERANCE = 1e-13
# 15 roots is where the double-precision tolerances were calibrated.
MAX_NUMERIC_DEGREE = 15


# -- exact power series -----------------------------------------------------

@dataclass(frozen=True)
class HSeries:
    """coeffs[m] = h_m(1/r_1, ..., 1/r_N), exact integers."""

    params: Params
    coeffs: list[int]


def h_coefficients(p: Params, m_max: int) -> HSeries:
    """Coefficients of (1 - x) / (1 - x^k - x^(k+l-1) + x^(k+l)) up to x^m_max."""
    if isinstance(m_max, bool) or not isinstance(m_max, int) or m_max < 0:
        raise ParameterError(f"m_max must be a nonnegative integer, got {m_max!r}")
    k, n = p.k, p.dim
    h: list[int] = []
    for m in range(m_max + 1):
        value = {0: 1, 1: -1}.get(m, 0)
        if m >= k:
            value += h[m - k]
        if m >= n:
            value += h[m - n]
        if m >= n + 1:
            value -= h[m - n - 1]
        h.append(value)
    return HSeries(p, h)


def h_ell_minus_1(p: Params) -> int:
    """Coefficient of x^(l-1): +1 if k | l-1, -1 if k | l-2, else 0."""
    if (p.ell - 1) % p.k == 0:
        return 1
    if (p.ell - 2) % p.k == 0:
        return -1
    return 0


# -- the characteristic polynomial and its roots ----------------------------

def char_poly_coeffs(p: Params) -> list[int]:
    """Coefficients of g_{k,l}, highest degree first."""
    return [1] + [0] * (p.ell - 1) + [-1] * p.k


def char_poly_eval(p: Params, x: complex) -> complex:
    """g_{k,l}(x) in polynomial form; g(1) = 1 - k."""
    acc = 0
    for c in char_poly_coeffs(p):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class RootSet:
    params: Params
    roots: tuple[complex, ...]
    residual_bound: float
    separation: float
    iterations: int

    @property
    def reciprocals(self) -> list[complex]:
        return [1 / r for r in self.roots]


def _aberth(coeffs: np.ndarray, z: np.ndarray) -> tuple[np.ndarray, int]:
    deriv = np.polyder(coeffs)
    n = len(z)
    off_diag = ~np.eye(n, dtype=bool)
    for it in range(1, MAX_ITERATIONS + 1):
        ratio = np.polyval(coeffs, z) / np.polyval(deriv, z)
        diff = z[:, None] - z[None, :]
        repulsion = np.sum(np.where(off_diag, 1 / np.where(off_diag, diff, 1), 0), axis=1)
        step = ratio / (1 - ratio * repulsion)
        z = z - step
        if np.max(np.abs(step)) < STEP_TOLERANCE:
            return z, it
    return z, MAX_ITERATIONS


def find_roots(p: Params, tol: float = 1e-10) -> RootSet:
    """All k+l-1 roots of g_{k,l} by Aberth iteration.

    Starting points are equally spaced on the circle of radius
    1 + max|coefficient|, rotated off the real axis so conjugate pairs can
    separate. Roots come back sorted by (real, imag).
    """
    if not tol > 0:
        raise ParameterError(f"tol must be positive, got {tol!r}")
    coeffs = np.array(char_poly_coeffs(p), dtype=complex)
    n = p.dim
    radius = 1 + np.max(np.abs(coeffs[1:]))
    angles = 2 * np.pi * np.arange(n) / n + 0.4
    z, iterations = _aberth(coeffs, radius * np.exp(1j * angles))
    residual = float(np.max(np.abs(np.polyval(coeffs, z))))
    if not np.all(np.isfinite(z)) or residual > tol:
        raise ConvergenceError(
            f"root finding for (k={p.k}, l={p.ell}) did not reach tol={tol:g} "
            f"after {iterations} iterations",
            residual,
        )
    roots = tuple(sorted((complex(r) for r in z), key=lambda r: (r.real, r.imag)))
    separation = min(abs(a - b) for a, b in itertools.combinations(roots, 2))
    return RootSet(p, roots, residual, separation, iterations)


# -- Binet coefficients -----------------------------------------------------

@dataclass(frozen=True)
class BinetCoeffs:
    """Weights a_i with C~_n = sum_i a_i r_i^n.

    ``brackets[i]`` is the initial-value sum in the numerator of a_i.
    """

    params: Params
    roots: tuple[complex, ...]
    values: tuple[complex, ...]
    brackets: tuple[complex, ...]

    def term(self, n: int) -> complex:
        return sum(a * r**n for a, r in zip(self.values, self.roots))


def binet_coefficients(rs: RootSet) -> BinetCoeffs:
    p = rs.params
    k, ell, n = p.k, p.ell, p.dim
    c = tilde_sequence(p, n)
    roots = rs.roots
    values, brackets = [], []
    for i, r in enumerate(roots, start=1):
        bracket = c[n - 1]
        for l in range(k - 1):
            bracket += c[l] * (r ** (l + 1) - 1) / (r ** (l + 1) * (r - 1))
        for l in range(k - 1, k + ell - 2):
            bracket += c[l] * (r**k - 1) / (r ** (l + 1) * (r - 1))
        denom = 1
        for j, s in enumerate(roots, start=1):
            if j > i:
                denom *= s - r
            elif j < i:
                denom *= r - s
        sign = -1 if (k + ell + i - 1) % 2 else 1
        values.append(sign * bracket / denom)
        brackets.append(bracket)
    return BinetCoeffs(p, roots, tuple(values), tuple(brackets))


# -- symmetric functions ----------------------------------------------------

def numeric_h(xs: Sequence[complex], m_max: int) -> list[complex]:
    """h_0..h_m_max of xs, one variable at a time: h'_m = h_m + x * h'_{m-1}."""
    h = [1] + [0] * m_max
    for x in xs:
        for m in range(1, m_max + 1):
            h[m] = h[m] + x * h[m - 1]
    return h


def monomial_h(m: int, xs: Sequence[complex]) -> complex:
    """h_m by summing every degree-m monomial."""
    return sum(
        (math.prod(c) for c in itertools.combinations_with_replacement(xs, m)),
        start=0,
    )


@dataclass(frozen=True)
class SchurCheck:
    passed: bool
    residual: float
    quotient: complex
    h: complex


def schur_h_check(m: int, xs: Sequence[complex], tol: float = 1e-9) -> SchurCheck:
    """Check s_(m,0,...,0)(xs) = h_m(xs) via the bialternant quotient."""
    xs = list(xs)
    n = len(xs)
    if n == 0:
        raise ParameterError("need at least one variable")
    if any(x == 0 for x in xs):
        raise ParameterError("variables must be nonzero")
    if any(a == b for a, b in itertools.combinations(xs, 2)):
        raise ParameterError("variables must be pairwise distinct")
    exponents = [m + n - 1] + [n - 1 - j for j in range(1, n)]
    num = determinant([[x**e for e in exponents] for x in xs]).value
    vandermonde = math.prod(a - b for a, b in itertools.combinations(xs, 2))
    h = monomial_h(m, xs)
    if isinstance(num, int) and isinstance(vandermonde, int):
        exact = num % vandermonde == 0
        quotient = num // vandermonde
        residual = 0.0 if exact and quotient == h else float(abs(num / vandermonde - h))
    else:
        quotient = num / vandermonde
        residual = abs(quotient - h) / max(1.0, abs(h))
    return SchurCheck(residual <= tol, residual, quotient, h)


# -- the identity chain -----------------------------------------------------

@dataclass(frozen=True)
class IdentityCheck:
    name: str
    residual: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.residual < self.tol


def _rel(lhs: complex, rhs: complex) -> float:
    return abs(lhs - rhs) / max(1.0, abs(rhs))


def unity_product(p: Params) -> complex:
    """prod_{i=1}^{l-1} (w^(i(k-1)) - 1) / (w^i - 1) with w = exp(2 pi i / l)."""
    w = cmath.exp(2j * cmath.pi / p.ell)
    return math.prod(
        ((w ** (i * (p.k - 1)) - 1) / (w**i - 1) for i in range(1, p.ell)), start=1
    )


SAMPLE_POINTS = (0.0, 0.5, -0.75, 0.6j, 0.3 - 0.4j)


def verify_root_identities(p: Params, tol: float = 1e-8) -> list[IdentityCheck]:
    """Evaluate each intermediate identity of the derivation at the roots.

    Returns one entry per identity; a failure is a report entry, not an
    exception. Root-finding failure still raises :class:`ConvergenceError`.
    """
    if not tol > 0:
        raise ParameterError(f"tol must be positive, got {tol!r}")
    rs = find_roots(p, min(tol, 1e-10))
    r = rs.roots
    n, k, ell = p.dim, p.k, p.ell
    sign_kl = (-1) ** (k + ell)
    checks = []

    checks.append(IdentityCheck("root_product", abs(math.prod(r) - sign_kl), tol))

    factor = max(
        _rel(char_poly_eval(p, x), -math.prod(1 - x / ri for ri in r))
        for x in SAMPLE_POINTS
    )
    checks.append(IdentityCheck("factorization", factor, tol))

    exact_h = h_coefficients(p, n - 1).coeffs
    approx_h = numeric_h(rs.reciprocals, n - 1)
    checks.append(IdentityCheck(
        "h_series", max(abs(a - e) for a, e in zip(approx_h, exact_h)), tol
    ))

    pairs = list(itertools.combinations(range(n), 2))
    mixed = math.prod((r[j] - r[i]) * (1 / r[i] - 1 / r[j]) for i, j in pairs)
    squared = math.prod((r[j] - r[i]) ** 2 for i, j in pairs) / sign_kl
    checks.append(IdentityCheck("vandermonde", _rel(mixed, squared), tol))

    omega = unity_product(p)
    lhs = math.prod((ri**ell - 1) / (ri * (ri - 1)) for ri in r)
    checks.append(IdentityCheck("unity_product", _rel(lhs, (-1) ** ((k + ell) * ell) * omega), tol))

    expected = 1 if math.gcd(ell, k - 1) == 1 else 0
    checks.append(IdentityCheck("gcd_product", abs(omega - expected), tol))
    return checks


def product_formula_det(p: Params, tol: float = 1e-10) -> complex:
    """det A~_{0,k,l} from the root product formula, in floating point.

    (prod a_j) * prod_{i<j} (r_j - r_i)(1/r_i - 1/r_j) * (prod r_i)^(k+2l-3)
    * h_{l-1}(1/r_1, ..., 1/r_N); ``tol`` bounds the root residual.
    """
    rs = find_roots(p, tol)
    binet = binet_coefficients(rs)
    r = rs.roots
    n = p.dim
    prod_a = math.prod(binet.values)
    mixed = math.prod(
        (r[j] - r[i]) * (1 / r[i] - 1 / r[j])
        for i, j in itertools.combinations(range(n), 2)
    )
    power = math.prod(r) ** (p.k + 2 * p.ell - 3)
    h = numeric_h(rs.reciprocals, p.ell - 1)[p.ell - 1]
    return prod_a * mixed * power * h
