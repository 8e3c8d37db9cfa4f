import random

import pytest
from hypothesis import given, settings, strategies as st

from orbitcodes import GF, NEG_INF, Poly, factor, gcd, irreducibles, is_irreducible, order

F2 = GF(2)
F3 = GF(3)
F4 = GF(2, 2)


def P2(*coeffs):
    return Poly(F2, coeffs)


def test_zero_polynomial_degree_sentinel():
    z = Poly.zero(F2)
    assert z.is_zero
    assert z.degree == NEG_INF
    assert z.degree < 0
    assert Poly(F2, [0, 0, 0]) == z


def test_trailing_zeros_stripped():
    assert Poly(F2, [1, 1, 0, 0]).coeffs == (1, 1)


def test_char_two_square():
    assert P2(1, 1) * P2(1, 1) == P2(1, 0, 1)  # (x+1)^2 = x^2+1


def test_gcd_example():
    assert gcd(P2(1, 0, 1), P2(1, 1)) == P2(1, 1)
    assert gcd(Poly.zero(F2), Poly.zero(F2)).is_zero


def test_divmod_by_one():
    f = P2(1, 1, 0, 1)
    q, r = divmod(f, Poly.one(F2))
    assert q == f and r.is_zero


def test_division_by_zero_rejected():
    with pytest.raises(ZeroDivisionError):
        divmod(P2(1, 1), Poly.zero(F2))


def test_mixed_fields_rejected():
    with pytest.raises(ValueError):
        P2(1, 1) + Poly(F3, [1, 1])


def test_gcd_is_monic_over_f3():
    g = gcd(Poly(F3, [2, 2]), Poly(F3, [1, 0, 2, 1]).scale(2))
    assert g.is_zero or g.is_monic


@settings(max_examples=150, deadline=None)
@given(
    st.lists(st.integers(0, 2), min_size=0, max_size=7),
    st.lists(st.integers(0, 2), min_size=1, max_size=5),
)
def test_divmod_invariant(fc, gc):
    f = Poly(F3, fc)
    g = Poly(F3, gc)
    if g.is_zero:
        return
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.is_zero or r.degree < g.degree


@settings(max_examples=100, deadline=None)
@given(
    st.lists(st.integers(0, 1), min_size=0, max_size=6),
    st.lists(st.integers(0, 1), min_size=0, max_size=6),
)
def test_ring_commutativity(ac, bc):
    a = Poly(F2, ac)
    b = Poly(F2, bc)
    assert a + b == b + a
    assert a * b == b * a


def test_irreducible_examples():
    assert is_irreducible(P2(1, 1, 0, 1))
    assert not is_irreducible(P2(1, 0, 1))
    assert is_irreducible(Poly.x(F2))
    with pytest.raises(ValueError):
        is_irreducible(Poly.one(F2))


def test_enumerate_degree_one():
    assert [f.coeffs for f in irreducibles(F2, 1)] == [(0, 1), (1, 1)]


def test_enumerate_degree_three():
    assert [f.coeffs for f in irreducibles(F2, 3)] == [(1, 1, 0, 1), (1, 0, 1, 1)]


def test_enumerate_degree_four_count():
    # necklace count (2^4 - 2^2) / 4
    assert len(irreducibles(F2, 4)) == 3


def test_enumerate_over_extension_field():
    assert len(irreducibles(F4, 2)) == (16 - 4) // 2


def test_factor_examples():
    assert factor(P2(1, 0, 1)) == ((P2(1, 1), 2),)
    assert factor(P2(1, 1, 0, 1)) == ((P2(1, 1, 0, 1), 1),)
    x_plus_1 = Poly(F3, [1, 1])
    x_plus_2 = Poly(F3, [2, 1])
    assert factor(Poly(F3, [2, 0, 1])) == ((x_plus_1, 1), (x_plus_2, 1))


def test_factor_requires_monic_nonconstant():
    with pytest.raises(ValueError):
        factor(Poly(F3, [1, 2]))
    with pytest.raises(ValueError):
        factor(Poly.one(F2))


def test_factor_recomposition_random():
    rng = random.Random(11)
    for _ in range(200):
        field = rng.choice((F2, F3))
        f = Poly.from_code(field, rng.randint(1, 8), rng.randrange(field.q**4))
        prod = Poly.one(field)
        for p, e in factor(f):
            assert is_irreducible(p)
            prod = prod * p**e
        assert prod == f


def test_order_examples():
    assert order(P2(1, 1)) == 1
    assert order(P2(1, 1, 0, 1)) == 7
    assert order(P2(1, 0, 1)) == 2  # (x+1)^2
    assert order(P2(1, 0, 1, 1)) == 7


def test_order_matches_incremental_oracle():
    x = Poly.x(F2)
    one = Poly.one(F2)
    for f in (P2(1, 1, 0, 1), P2(1, 1, 1), P2(1, 1, 1, 1, 1)):
        e = 1
        r = x % f
        while r != one:
            r = r * x % f
            e += 1
        assert order(f) == e


def test_order_rejects_zero_constant_term():
    with pytest.raises(ValueError):
        order(P2(0, 1, 1))
    with pytest.raises(ValueError):
        order(Poly.one(F2))


def test_pow_with_modulus():
    f = P2(1, 1, 0, 1)
    assert pow(Poly.x(F2), 7, f) == Poly.one(F2)
    assert pow(Poly.x(F2), 6, f) != Poly.one(F2)


def test_evaluate():
    f = Poly(F3, [1, 2, 1])  # 1 + 2x + x^2
    assert f.evaluate(0) == 1
    assert f.evaluate(1) == (1 + 2 + 1) % 3
    assert f.evaluate(2) == (1 + 4 + 4) % 3


def test_poly_hash_and_code():
    assert hash(P2(1, 1)) == hash(P2(1, 1))
    assert P2(1, 1, 0, 1).code() == 0b1011
    assert Poly.from_code(F2, 3, 0b011).coeffs == (1, 1, 0, 1)
