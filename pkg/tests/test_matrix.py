import random

import pytest
from hypothesis import given, settings, strategies as st

from orbitcodes import (
    GF,
    Mat,
    Poly,
    SingularMatrixError,
    block_diag,
    companion,
    is_invertible,
    rank,
    rref,
)

F2 = GF(2)
F3 = GF(3)


def test_mul_identity():
    a = Mat.from_rows(F2, [[1, 0, 1], [0, 1, 1]])
    assert a * Mat.identity(F2, 3) == a
    assert Mat.identity(F2, 2) * a == a


def test_mul_shape_mismatch():
    with pytest.raises(ValueError):
        Mat.identity(F2, 2) * Mat.identity(F2, 3)


def test_mixed_field_rejected():
    with pytest.raises(ValueError):
        Mat.identity(F2, 2) * Mat.identity(F3, 2)


def test_swap_matrix_is_its_own_inverse():
    s = Mat.from_rows(F2, [[0, 1], [1, 0]])
    assert s.inverse() == s


def test_inverse_of_singular_raises():
    with pytest.raises(SingularMatrixError):
        Mat.from_rows(F2, [[1, 1], [1, 1]]).inverse()


def test_negative_power_uses_inverse():
    a = Mat.from_rows(F3, [[1, 1], [0, 1]])
    assert a ** (-1) == a.inverse()
    assert a**0 == Mat.identity(F3, 2)
    assert a**3 == a * a * a


def test_rref_identity():
    r = rref(Mat.identity(F2, 3))
    assert r.matrix == Mat.identity(F2, 3)
    assert r.pivots == (0, 1, 2)
    assert r.rank == 3


def test_rref_example():
    r = rref(Mat.from_rows(F2, [[1, 1, 0], [1, 1, 1]]))
    assert r.matrix.to_lists() == [[1, 1, 0], [0, 0, 1]]
    assert r.pivots == (0, 2)
    assert r.rank == 2


def test_rref_zero_matrix():
    r = rref(Mat.zeros(F2, 2, 3))
    assert r.matrix == Mat.zeros(F2, 2, 3)
    assert r.rank == 0


def test_rref_leading_one_over_f3():
    r = rref(Mat.from_rows(F3, [[2, 1], [1, 2]]))
    assert r.matrix.row(0)[r.pivots[0]] == 1


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 3 ** 12 - 1))
def test_rref_idempotent(seed):
    rng = random.Random(seed)
    m = Mat(F3, 3, 4, [rng.randrange(3) for _ in range(12)])
    once = rref(m).matrix
    assert rref(once).matrix == once


def test_companion_cubic():
    c = companion(Poly(F2, [1, 1, 0, 1]))
    assert c.to_lists() == [[0, 1, 0], [0, 0, 1], [1, 1, 0]]


def test_companion_negates_coefficients():
    c = companion(Poly(F3, [1, 0, 1]))
    assert c.to_lists() == [[0, 1], [2, 0]]


def test_companion_linear():
    assert companion(Poly(F2, [1, 1])).to_lists() == [[1]]


def test_companion_rejects_bad_input():
    with pytest.raises(ValueError):
        companion(Poly.one(F2))
    with pytest.raises(ValueError):
        companion(Poly(F3, [1, 2]))


def test_block_diag_single():
    b = companion(Poly(F2, [1, 1, 0, 1]))
    assert block_diag([b]) == b


def test_block_diag_ones():
    one = Mat.from_rows(F2, [[1]])
    assert block_diag([one, one]) == Mat.identity(F2, 2)


def test_block_diag_assembly():
    d = block_diag([companion(Poly(F2, [1, 1, 0, 1])), companion(Poly(F2, [1, 1, 1]))])
    assert d.to_lists() == [
        [0, 1, 0, 0, 0],
        [0, 0, 1, 0, 0],
        [1, 1, 0, 0, 0],
        [0, 0, 0, 0, 1],
        [0, 0, 0, 1, 1],
    ]


def test_block_diag_rejects_non_square():
    with pytest.raises(ValueError):
        block_diag([Mat.zeros(F2, 1, 2)])


def test_transpose():
    a = companion(Poly(F2, [1, 1, 0, 1]))
    assert a.transpose().to_lists() == [[0, 0, 1], [1, 0, 1], [0, 1, 0]]
    assert a.transpose().transpose() == a


def test_rank_and_invertibility():
    assert rank(Mat.from_rows(F2, [[1, 1], [1, 1]])) == 1
    assert not is_invertible(Mat.zeros(F2, 2, 2))
    assert is_invertible(Mat.identity(F3, 4))
    assert not is_invertible(Mat.zeros(F2, 2, 3))


def test_inverse_round_trip_random():
    rng = random.Random(3)
    for _ in range(25):
        f = rng.choice((F2, F3))
        n = rng.randint(1, 5)
        while True:
            m = Mat(f, n, n, [rng.randrange(f.q) for _ in range(n * n)])
            if is_invertible(m):
                break
        assert (m * m.inverse()).is_identity()
        assert (m.inverse() * m).is_identity()


def test_add_sub():
    a = Mat.from_rows(F3, [[1, 2], [0, 1]])
    b = Mat.from_rows(F3, [[2, 2], [1, 0]])
    assert (a + b).to_lists() == [[0, 1], [1, 1]]
    assert (a - a) == Mat.zeros(F3, 2, 2)
    assert (-a + a) == Mat.zeros(F3, 2, 2)


def test_hashable_for_sets():
    a = Mat.identity(F2, 2)
    b = Mat.from_rows(F2, [[1, 0], [0, 1]])
    assert len({a, b}) == 1
