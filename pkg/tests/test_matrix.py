from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from services.generators import make_rng
from utils.errors import MatrixError, NonSymmetricError
from utils.matrix import (
    IntMatrix,
    Permutation,
    RatMatrix,
    apply_column_permutation,
    determinant,
    direct_sum,
    drop_zero_rows,
    gram,
    identity,
    inverse,
    is_unimodular,
    matrix_of,
    multiply,
    permute_rows,
    rank,
    require_symmetric,
    rref,
    rref_with_pivots,
    submatrix,
    transpose,
    zero_columns,
    zeros,
)


@st.composite
def int_matrices(draw, max_rows=4, max_cols=4, lo=-5, hi=5, square=False):
    m = draw(st.integers(1, max_rows))
    n = m if square else draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=m, max_size=m))
    return IntMatrix(rows)


@st.composite
def _fixed_shape(draw, m, n, lo=-5, hi=5):
    return IntMatrix(draw(st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=m, max_size=m)))


@st.composite
def permutations(draw, n):
    return Permutation(draw(st.permutations(list(range(1, n + 1)))))


def test_construction_rejects_bad_shapes():
    with pytest.raises(MatrixError):
        IntMatrix([])
    with pytest.raises(MatrixError):
        IntMatrix([[1, 2], [3]])
    with pytest.raises(MatrixError):
        IntMatrix([[1.5, 2]])
    with pytest.raises(MatrixError):
        IntMatrix([[True, 2]])


def test_numpy_integers_are_accepted():
    a = IntMatrix(np.array([[1, 2], [3, 4]], dtype=np.int64).tolist())
    b = IntMatrix([[np.int64(1), np.int64(2)], [np.int64(3), np.int64(4)]])
    assert a == b
    assert type(b[0, 0]) is int


def test_entries_are_arbitrary_precision():
    big = 10 ** 40
    a = IntMatrix([[big, 1], [0, 1]])
    assert multiply(a, a)[0, 0] == big * big
    assert determinant(a) == big


def test_identity_and_zeros():
    assert identity(3).to_lists() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert zeros(2, 3).to_lists() == [[0, 0, 0], [0, 0, 0]]
    assert zeros(2, 3).shape == (2, 3)


def test_multiply_dimension_mismatch():
    with pytest.raises(MatrixError, match="dimension mismatch"):
        multiply(IntMatrix([[1, 2]]), IntMatrix([[1, 2]]))


def test_determinant_non_square():
    with pytest.raises(MatrixError):
        determinant(IntMatrix([[1, 2, 3]]))


@settings(max_examples=200, deadline=None)
@given(int_matrices(max_rows=5, square=True))
def test_determinant_matches_sympy(a):
    assert determinant(a) == sympy.Matrix(a.to_lists()).det()


@settings(max_examples=200, deadline=None)
@given(int_matrices(max_rows=4, max_cols=6))
def test_rank_and_rref_match_sympy(a):
    expected, expected_pivots = sympy.Matrix(a.to_lists()).rref()
    r, pivots = rref_with_pivots(a)
    assert rank(a) == sympy.Matrix(a.to_lists()).rank()
    assert pivots == [p + 1 for p in expected_pivots]
    assert r.to_lists() == [[Fraction(int(x.p), int(x.q)) for x in row] for row in expected.tolist()]


def test_rref_of_rational_matrix():
    r = rref(RatMatrix([[Fraction(1, 2), 1], [1, 2]]))
    assert r == RatMatrix([[1, 2], [0, 0]])


@settings(max_examples=100, deadline=None)
@given(int_matrices(max_rows=3, max_cols=3), int_matrices(max_rows=3, max_cols=3))
def test_transpose_of_product(a, b):
    if a.cols != b.rows:
        return
    assert transpose(multiply(a, b)) == multiply(transpose(b), transpose(a))


@settings(max_examples=100, deadline=None)
@given(int_matrices())
def test_gram_is_symmetric(a):
    g = gram(a)
    assert g.is_symmetric()
    assert g == multiply(transpose(a), a)


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_multiply_is_associative(data):
    dims = data.draw(st.lists(st.integers(1, 4), min_size=4, max_size=4))
    a, b, c = (data.draw(_fixed_shape(dims[k], dims[k + 1])) for k in range(3))
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_determinant_is_multiplicative(data):
    n = data.draw(st.integers(1, 4))
    a = data.draw(_fixed_shape(n, n))
    b = data.draw(_fixed_shape(n, n))
    assert determinant(multiply(a, b)) == determinant(a) * determinant(b)


@settings(max_examples=50, deadline=None)
@given(int_matrices(max_rows=4, max_cols=5))
def test_gram_is_positive_semidefinite(a):
    g = gram(a)
    rng = make_rng(a.rows * 31 + a.cols)
    for _ in range(100):
        x = IntMatrix([[int(v)] for v in rng.integers(-10, 11, size=a.cols)])
        assert multiply(transpose(x), multiply(g, x))[0, 0] >= 0


def test_require_symmetric():
    require_symmetric(IntMatrix([[1, 2], [2, 1]]))
    with pytest.raises(NonSymmetricError):
        require_symmetric(IntMatrix([[1, 2], [3, 1]]))
    with pytest.raises(NonSymmetricError):
        require_symmetric(IntMatrix([[1, 2]]))


def test_direct_sum_layout():
    ds = direct_sum([IntMatrix([[2, 0, 1], [0, 1, 2]]), IntMatrix([[2, 3]])])
    assert ds.to_lists() == [[2, 0, 1, 0, 0], [0, 1, 2, 0, 0], [0, 0, 0, 2, 3]]
    with pytest.raises(MatrixError):
        direct_sum([])


def test_direct_sum_blocks_at_offsets():
    blocks = [IntMatrix([[3, 1], [1, 2]]), IntMatrix([[-2, 4, 6]]), IntMatrix([[5], [7]])]
    ds = direct_sum(blocks)
    assert ds.shape == (5, 6)
    row_off = col_off = 0
    for block in blocks:
        rows = list(range(row_off + 1, row_off + block.rows + 1))
        cols = list(range(col_off + 1, col_off + block.cols + 1))
        assert submatrix(ds, rows, cols) == block
        others = [j for j in range(1, ds.cols + 1) if j not in cols]
        assert all(ds[i - 1, j - 1] == 0 for i in rows for j in others)
        row_off += block.rows
        col_off += block.cols


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 7).flatmap(permutations))
def test_permutation_matrix_is_orthogonal(q):
    qm = matrix_of(q)
    n = len(q)
    assert multiply(transpose(qm), qm) == identity(n)
    assert multiply(qm, transpose(qm)) == identity(n)


def test_permutation_semantics():
    q = Permutation([3, 1, 2])
    a = IntMatrix([[10, 20, 30]])
    # la columna j de A·Q es la columna q(j) de A
    assert apply_column_permutation(a, q).to_lists() == [[30, 10, 20]]
    assert apply_column_permutation(a, q) == multiply(a, matrix_of(q))
    assert Permutation.identity(3).is_identity()
    with pytest.raises(MatrixError):
        Permutation([1, 1, 2])
    with pytest.raises(MatrixError):
        Permutation([0, 1, 2])


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_permute_rows_is_transpose_product(data):
    a = data.draw(int_matrices(max_rows=4, max_cols=3))
    r = data.draw(permutations(a.rows))
    assert permute_rows(a, r) == multiply(transpose(matrix_of(r)), a)


def test_submatrix_and_zero_columns():
    a = IntMatrix([[1, 0, 2], [3, 0, 4]])
    assert zero_columns(a) == [2]
    assert submatrix(a, [2], [1, 3]).to_lists() == [[3, 4]]
    with pytest.raises(MatrixError):
        submatrix(a, [3], [1])


def test_drop_zero_rows():
    a = IntMatrix([[0, 0], [1, 2], [0, 0]])
    assert drop_zero_rows(a).to_lists() == [[1, 2]]
    with pytest.raises(MatrixError):
        drop_zero_rows(zeros(2, 2))


def test_inverse_of_unimodular():
    p = IntMatrix([[1, -2, 2], [1, -1, 2], [0, -1, 1]])
    assert is_unimodular(p)
    assert inverse(p) == IntMatrix([[1, 0, -2], [-1, 1, 0], [-1, 1, 1]])
    assert multiply(p, inverse(p)) == identity(3)


def test_inverse_errors():
    with pytest.raises(MatrixError):
        inverse(IntMatrix([[1, 2], [2, 4]]))
    with pytest.raises(MatrixError, match="not integral"):
        inverse(IntMatrix([[2, 0], [0, 1]]))
    with pytest.raises(MatrixError):
        inverse(IntMatrix([[1, 2, 3]]))


def test_matrices_are_hashable_values():
    assert {IntMatrix([[1, 2]]), IntMatrix([[1, 2]])} == {IntMatrix([[1, 2]])}
    assert RatMatrix([[1, 2]]) == IntMatrix([[1, 2]])
