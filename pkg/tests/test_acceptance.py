"""Exit criteria for the package, one test per criterion.

Each test records a PASS/FAIL line that is printed in the pytest terminal
summary under "acceptance criteria".
"""

import random
import time
from contextlib import contextmanager

from conftest import ACCEPTANCE_LINES
from fibdet import (
    Params,
    alpha_period_analysis,
    beta_tail_analysis,
    build_miles_matrix,
    build_original_matrix,
    build_tilde_matrix,
    classic_fibonacci,
    closed_det_original,
    closed_det_tilde,
    cofactor_determinant,
    determinant,
    find_roots,
    h_coefficients,
    miles_closed,
    product_formula_det,
    radical,
    verify_root_identities,
)
from fibdet.series import numeric_h
from oracles import theorem_by_conditions


def small_matrices_from_criteria():
    """Every matrix of dimension <= 5 that criteria 1-5 evaluate."""
    f = classic_fibonacci(203)
    for n in range(201):
        yield [[f[n], f[n + 1]], [f[n + 1], f[n + 2]]]
    for k in range(2, 6):
        for n in range(26):
            yield build_miles_matrix(k, n).tolist()
    for k in range(2, 5):
        for ell in range(2, 7 - k):
            p = Params(k, ell)
            yield build_tilde_matrix(p, 0).tolist()
            for j in range(16):
                yield build_tilde_matrix(p, j).tolist()
            for j in range(11):
                yield build_original_matrix(p, j).tolist()


@contextmanager
def criterion(number, title):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        ACCEPTANCE_LINES.append(f"[{number:2d}] FAIL  {title}")
        print(f"criterion {number}: FAIL")
        raise
    elapsed = time.perf_counter() - start
    ACCEPTANCE_LINES.append(f"[{number:2d}] PASS  {title} ({elapsed:.2f}s)")
    print(f"criterion {number}: PASS in {elapsed:.2f}s")


def test_01_cassini():
    with criterion(1, "Cassini f_n f_{n+2} - f_{n+1}^2 = (-1)^n, n = 0..200, < 1 s"):
        start = time.perf_counter()
        f = classic_fibonacci(203)
        for n in range(201):
            assert f[n] * f[n + 2] - f[n + 1] ** 2 == (-1) ** n
            rows = [[f[n], f[n + 1]], [f[n + 1], f[n + 2]]]
            assert determinant(rows).value == (-1) ** n
        assert time.perf_counter() - start < 1.0


def test_02_miles():
    with criterion(2, "Miles k x k determinants, k = 2..7, n = 0..25, < 10 s"):
        start = time.perf_counter()
        for k in range(2, 8):
            for n in range(26):
                m = build_miles_matrix(k, n)
                assert determinant(m).value == miles_closed(k, n) == (-1) ** ((2 * n + k) * (k - 1) // 2)
        assert time.perf_counter() - start < 10.0


def test_03_theorem():
    with criterion(3, "closed form for det A~_{0,k,l}, 2 <= k, l <= 12, < 60 s"):
        start = time.perf_counter()
        for k in range(2, 13):
            for ell in range(2, 13):
                p = Params(k, ell)
                m = build_tilde_matrix(p, 0)
                exact = determinant(m).value
                assert exact == closed_det_tilde(p, 0) == theorem_by_conditions(k, ell), (k, ell)
        assert time.perf_counter() - start < 60.0


def test_04_shift_rule():
    with criterion(4, "det A~_j = (-1)^(j(k+l-2)) det A~_0, 2 <= k, l <= 8, j = 0..15"):
        for k in range(2, 9):
            for ell in range(2, 9):
                p = Params(k, ell)
                base = determinant(build_tilde_matrix(p, 0)).value
                for j in range(16):
                    m = build_tilde_matrix(p, j)
                    exact = determinant(m).value
                    assert exact == (-1) ** (j * (k + ell - 2)) * base == closed_det_tilde(p, j)


def test_05_original_relation():
    with criterion(5, "A_{j,k,l} = A~_{j+k+1,k,l} entrywise and in det, 2 <= k, l <= 8, j = 0..10"):
        for k in range(2, 9):
            for ell in range(2, 9):
                p = Params(k, ell)
                for j in range(11):
                    a = build_original_matrix(p, j)
                    t = build_tilde_matrix(p, j + k + 1)
                    assert a.rows == t.rows
                    assert determinant(a).value == determinant(t).value == closed_det_original(p, j)


def test_06_h_series():
    with criterion(6, "h-series pattern (k, l <= 12) and root-based h_m within 1e-6 (k, l <= 8)"):
        for k in range(2, 13):
            for ell in range(2, 13):
                coeffs = h_coefficients(Params(k, ell), k + ell - 2).coeffs
                pattern = [1 if m % k == 0 else -1 if (m - 1) % k == 0 else 0
                           for m in range(k + ell - 1)]
                assert coeffs == pattern, (k, ell)
        for k in range(2, 9):
            for ell in range(2, 9):
                p = Params(k, ell)
                m_max = 3 * p.dim
                exact = h_coefficients(p, m_max).coeffs
                approx = numeric_h(find_roots(p).reciprocals, m_max)
                assert max(abs(a - e) for a, e in zip(approx, exact)) < 1e-6, (k, ell)


def test_07_identity_suite():
    with criterion(7, "derivation identities (a)-(f), residual < 1e-8, 2 <= k, l <= 8"):
        worst = 0.0
        for k in range(2, 9):
            for ell in range(2, 9):
                checks = verify_root_identities(Params(k, ell), 1e-8)
                assert len(checks) == 6
                for c in checks:
                    assert c.residual < 1e-8, (k, ell, c)
                    worst = max(worst, c.residual)
        print(f"worst identity residual {worst:.2e}")


def test_08_product_formula():
    with criterion(8, "root product formula within 1e-6 of the exact det, 2 <= k, l <= 8"):
        for k in range(2, 9):
            for ell in range(2, 9):
                p = Params(k, ell)
                exact = determinant(build_tilde_matrix(p, 0)).value
                assert abs(product_formula_det(p) - exact) < 1e-6, (k, ell)


def test_09_corollary_period():
    with criterion(9, "period of |det A~_{0,k0,l}| in l divides k0 rad(k0-1), k0 = 2..8"):
        for k0 in range(2, 9):
            bound = k0 * radical(k0 - 1)
            report = alpha_period_analysis(k0, 2 + 3 * bound)
            assert report.bound == bound
            assert report.period is not None and bound % report.period == 0, k0
            assert report.divides_bound
            if k0 <= 4:
                exact = [abs(determinant(build_tilde_matrix(Params(k0, ell), 0)).value)
                         for ell in range(2, 3 + 3 * bound)]
                assert exact == report.observed_values


def test_10_corollary_tail():
    with criterion(10, "beta_k = 0 for k >= l0 (l0 = 3..10); l0 = 2 anomaly reproduced"):
        for l0 in range(3, 11):
            report = beta_tail_analysis(l0, l0 + 10)
            assert report.tail_zero_from is not None and report.tail_zero_from <= l0
            for k in range(l0, l0 + 11):
                assert determinant(build_tilde_matrix(Params(k, l0), 0)).value == 0
        anomaly = beta_tail_analysis(2, 20)
        assert anomaly.tail_zero_from is None
        for k in range(2, 21):
            exact = abs(determinant(build_tilde_matrix(Params(k, 2), 0)).value)
            assert exact == anomaly.values[k - 2] == (1 if k % 2 == 0 else 0)
        print(f"l0 = 2: beta_k nonzero at k = {anomaly.nonzero_ks()}; not eventually zero")


def test_11_determinant_oracle():
    with criterion(11, "Bareiss equals cofactor expansion (dim <= 5 from 1-5, 100 random)"):
        small = list(small_matrices_from_criteria())
        # 201 Cassini + 4*26 Miles + 6 (k, l) pairs * (1 + 16 + 11)
        assert len(small) == 201 + 104 + 6 * 28
        for rows in small:
            assert determinant(rows).value == cofactor_determinant(rows)
        rng = random.Random(20240611)
        for _ in range(100):
            n = rng.randint(1, 5)
            rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            assert determinant(rows).value == cofactor_determinant(rows)
