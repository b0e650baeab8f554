import pytest
from hypothesis import given, strategies as st

from fibdet import (
    ExactMatrix,
    ParameterError,
    Params,
    ShapeError,
    build_miles_matrix,
    build_original_matrix,
    build_tilde_matrix,
    miles_sequence,
    original_sequence,
    tilde_sequence,
)
from fibdet.matrices import reference_index

params = st.builds(Params, st.integers(2, 8), st.integers(2, 8))


@pytest.mark.parametrize("k, ell, j, rows", [
    (2, 2, 0, [[1, 1, 1], [0, 1, 1], [1, 1, 2]]),
    (2, 3, 0, [[1, 1, 1, 1], [0, 1, 1, 2], [1, 1, 2, 2], [1, 2, 2, 2]]),
    (2, 2, 1, [[0, 1, 1], [1, 1, 2], [1, 2, 2]]),
])
def test_tilde_examples(k, ell, j, rows):
    m = build_tilde_matrix(Params(k, ell), j)
    assert m.tolist() == rows
    assert (m.kind, m.j, m.params) == ("tilde", j, Params(k, ell))


def test_original_examples():
    p = Params(2, 2)
    assert build_original_matrix(p, 0).tolist() == [[1, 2, 2], [1, 2, 3], [2, 3, 4]]
    assert build_original_matrix(p, 0).rows == build_tilde_matrix(p, 3).rows
    q = Params(3, 2)
    assert build_original_matrix(q, 0).rows == build_tilde_matrix(q, 4).rows


@pytest.mark.parametrize("k, n, rows", [
    (2, 1, [[1, 1], [1, 2]]),
    (3, 2, [[1, 1, 2], [1, 2, 4], [2, 4, 7]]),
    (2, 0, [[0, 1], [1, 1]]),
])
def test_miles_examples(k, n, rows):
    assert build_miles_matrix(k, n).tolist() == rows


def test_corner_indices():
    p = Params(4, 3)
    j = 2
    m = build_tilde_matrix(p, j)
    d = p.dim
    assert reference_index(m, 0, d - 1) == j + p.k + 2 * p.ell - 3
    assert reference_index(m, d - 1, d - 1) == j + 2 * p.k + 3 * p.ell - 5
    # first column is not part of the Hankel block: gap of l
    assert reference_index(m, 0, 1) - reference_index(m, 0, 0) == p.ell


@given(params, st.integers(0, 12))
def test_hankel_block_and_provenance(p, j):
    m = build_tilde_matrix(p, j)
    d = m.dim
    for i in range(d - 1):
        for c in range(1, d - 1):
            assert m[i + 1, c] == m[i, c + 1]
    seq = tilde_sequence(p, j + 2 * p.k + 3 * p.ell)
    assert all(m[i, c] == seq[reference_index(m, i, c)] for i in range(d) for c in range(d))

    o = build_original_matrix(p, j)
    orig = original_sequence(p, j + 2 * p.k + 3 * p.ell)
    assert all(o[i, c] == orig[reference_index(o, i, c)] for i in range(d) for c in range(d))
    assert o.rows == build_tilde_matrix(p, j + p.k + 1).rows


@given(st.integers(2, 7), st.integers(0, 20))
def test_miles_provenance(k, n):
    m = build_miles_matrix(k, n)
    f = miles_sequence(k, n + 2 * k)
    assert m.dim == k
    assert all(m[i, c] == f[n + i + c] for i in range(k) for c in range(k))


def test_errors():
    with pytest.raises(ParameterError):
        build_tilde_matrix(Params(2, 2), -1)
    with pytest.raises(ParameterError):
        build_miles_matrix(1, 0)
    with pytest.raises(ShapeError):
        ExactMatrix(((1, 2), (3,)))
