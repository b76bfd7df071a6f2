import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from services.generators import make_rng, random_matrix, random_unimodular
from services.hermite import (
    hermite_normal_form,
    hnf_pivots,
    is_hnf,
    is_hnf_witness,
    strip_zero_rows,
)
from services.selftest import WORKED_A, WORKED_H, WORKED_P, WORKED_P_INVERSE
from utils.errors import MatrixError
from utils.matrix import (
    IntMatrix,
    direct_sum,
    identity,
    is_unimodular,
    multiply,
    rank,
    zeros,
)


@st.composite
def int_matrices(draw, max_rows=4, max_cols=5, lo=-6, hi=6):
    m = draw(st.integers(1, max_rows))
    n = draw(st.integers(1, max_cols))
    return IntMatrix(draw(st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n),
                                   min_size=m, max_size=m)))


def test_worked_example_hnf():
    res = hermite_normal_form(WORKED_A)
    assert res.h == WORKED_H
    assert res.pivot_cols == (1, 2, 3)
    assert res.rank == 3
    assert multiply(res.p, res.h) == WORKED_A
    assert abs(sympy.Matrix(res.p.to_lists()).det()) == 1
    assert multiply(res.p_inverse, WORKED_A) == res.h


def test_worked_example_witness_is_accepted():
    assert is_hnf_witness(WORKED_A, WORKED_H, WORKED_P)
    assert multiply(WORKED_P_INVERSE, WORKED_A) == WORKED_H
    assert not is_hnf_witness(WORKED_A, WORKED_H, WORKED_P.scale(2))


def test_zero_matrix():
    res = hermite_normal_form(zeros(2, 3))
    assert res.h == zeros(2, 3)
    assert res.rank == 0
    assert res.pivot_cols == ()
    assert res.p == identity(2)
    with pytest.raises(MatrixError):
        strip_zero_rows(res)


def test_single_row_and_column():
    assert hermite_normal_form(IntMatrix([[-4, 6]])).h == IntMatrix([[4, -6]])
    assert hermite_normal_form(IntMatrix([[4], [6]])).h == IntMatrix([[2], [0]])
    assert hermite_normal_form(IntMatrix([[0, -3]])).pivot_cols == (2,)


def test_rank_deficient_input_keeps_zero_rows_last():
    a = IntMatrix([[1, 2, 3], [2, 4, 6], [0, 0, 5]])
    res = hermite_normal_form(a)
    assert res.rank == 2
    assert res.h.row(2) == (0, 0, 0)
    assert strip_zero_rows(res) == IntMatrix([res.h.row(0), res.h.row(1)])
    assert multiply(res.p, res.h) == a
    assert is_unimodular(res.p)


def test_hnf_pivots_rejects_non_hnf():
    assert hnf_pivots(WORKED_H) == (True, [1, 2, 3])
    # pivote negativo
    assert not is_hnf(IntMatrix([[-1, 0], [0, 1]]))
    # entrada sobre el pivote fuera de [0, pivote)
    assert not is_hnf(IntMatrix([[1, 3], [0, 2]]))
    assert not is_hnf(IntMatrix([[1, -1], [0, 2]]))
    # fila no nula bajo una nula
    assert not is_hnf(IntMatrix([[0, 0], [0, 1]]))
    # pivotes no estrictamente a la derecha
    assert not is_hnf(IntMatrix([[1, 0], [1, 0]]))


def test_hnf_pivots_are_one_based_on_failure():
    # el segundo pivote es negativo: se informa el primero en base 1
    assert hnf_pivots(IntMatrix([[0, 2, 0], [0, 0, -1]])) == (False, [2])
    # falla la condición sobre el pivote tras encontrar ambos
    assert hnf_pivots(IntMatrix([[1, 3], [0, 2]])) == (False, [1, 2])
    assert hnf_pivots(IntMatrix([[1, 0], [1, 0]])) == (False, [1])


@settings(max_examples=300, deadline=None)
@given(int_matrices())
def test_witness_and_shape(a):
    res = hermite_normal_form(a)
    assert is_hnf(res.h)
    assert is_unimodular(res.p)
    assert multiply(res.p, res.h) == a
    assert multiply(res.p, res.p_inverse) == identity(a.rows)
    assert res.rank == rank(a) == sympy.Matrix(a.to_lists()).rank()
    assert list(res.pivot_cols) == hnf_pivots(res.h)[1]


@settings(max_examples=100, deadline=None)
@given(int_matrices(max_rows=3, max_cols=3, lo=-10 ** 12, hi=10 ** 12))
def test_large_entries_stay_exact(a):
    res = hermite_normal_form(a)
    assert multiply(res.p, res.h) == a
    assert is_hnf(res.h)


@pytest.mark.slow
def test_idempotence_and_unimodular_invariance():
    rng = make_rng(6)
    for _ in range(1000):
        m = int(rng.integers(1, 5))
        n = int(rng.integers(1, 7))
        a = random_matrix(rng, m, n)
        h = hermite_normal_form(a).h
        assert hermite_normal_form(h).h == h
        u = random_unimodular(rng, m)
        assert hermite_normal_form(multiply(u, a)).h == h


def test_block_compatibility():
    blocks = [IntMatrix([[3, 1], [1, 2]]), IntMatrix([[-2, 4, 6]]), IntMatrix([[5], [7]])]
    expected = direct_sum([hermite_normal_form(b).h for b in blocks])
    assert hermite_normal_form(direct_sum(blocks)).h == expected
