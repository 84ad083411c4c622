import math
import random

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from hyperjac import poly as P
from hyperjac.errors import DivisionByZeroPoly, InexactDivision, NotCoprime, ZeroPolynomial
from hyperjac.ff import FieldCtx, OpCount

from oracles import naive_mul, naive_sub, sylvester_resultant

F5, F7, F11, F13, F101 = (FieldCtx(p) for p in (5, 7, 11, 13, 101))
x = sympy.symbols("x")


def coeff_lists(max_len=8):
    return st.lists(st.integers(min_value=0, max_value=100), max_size=max_len)


def random_monic(F, d, rng):
    return tuple(rng.randrange(F.p) for _ in range(d)) + (1,)


def sympy_gcd(F, a, b):
    ga = sympy.Poly(list(reversed(a)) or [0], x, modulus=F.p)
    gb = sympy.Poly(list(reversed(b)) or [0], x, modulus=F.p)
    g = ga.gcd(gb)
    return P.from_list(F, list(reversed(g.all_coeffs())))


def test_degree():
    assert P.degree(P.ZERO) == -math.inf
    assert P.degree((5,)) == 0
    assert P.degree((1, 0, 0, 1)) == 3


def test_trim_and_from_list():
    assert P.from_list(F7, [8, 0, 14, 7]) == (1,)
    assert P.from_list(F7, []) == P.ZERO


def test_mul_examples():
    assert P.mul(F7, (1, 1), (6, 1)) == (6, 0, 1)
    assert P.mul(F7, (3, 4), P.ZERO) == P.ZERO
    assert P.mul(F5, (1, 0, 1), (2, 0, 1)) == (2, 0, 3, 0, 1)


def test_divrem_examples():
    assert P.divrem(F7, (1, 0, 1), (0, 1)) == ((0, 1), (1,))
    a = (3, 1, 4, 1)
    assert P.divrem(F7, a, (1,)) == (a, P.ZERO)
    q, r = P.divrem(F5, (1, 2, 0, 1), (1, 0, 1))
    assert (q, r) == ((0, 1), (1, 1))
    assert P.add(F5, P.mul(F5, q, (1, 0, 1)), r) == (1, 2, 0, 1)


def test_divrem_by_zero():
    with pytest.raises(DivisionByZeroPoly):
        P.divrem(F7, (1, 1), P.ZERO)


def test_exact_div_examples():
    assert P.exact_div(F7, (6, 0, 1), (6, 1)) == (1, 1)
    assert P.exact_div(F7, P.ZERO, (2, 1)) == P.ZERO
    prod = P.mul(F11, (1, 0, 1), (1, 1, 0, 1))
    assert P.exact_div(F11, prod, (1, 0, 1)) == (1, 1, 0, 1)
    with pytest.raises(InexactDivision):
        P.exact_div(F7, (1, 0, 1), (0, 1))


def test_make_monic_examples():
    assert P.make_monic(F7, (3, 3)) == (5, (1, 1))
    assert P.make_monic(F7, (2, 1)) == (1, (2, 1))
    assert P.make_monic(F5, (4, 0, 2))[1] == (2, 0, 1)
    with pytest.raises(ZeroPolynomial):
        P.make_monic(F5, P.ZERO)


def test_xgcd3_examples():
    w, c1, c2, c3 = P.xgcd3(F7, (0, 1), (1, 1), (3, 2))
    assert w == P.ONE
    lhs = P.add(F7, P.add(F7, P.mul(F7, c1, (0, 1)), P.mul(F7, c2, (1, 1))), P.mul(F7, c3, (3, 2)))
    assert lhs == P.ONE
    w, *_ = P.xgcd3(F7, (2, 1), (2, 1), P.ZERO)
    assert w == (2, 1)
    with pytest.raises(ZeroPolynomial):
        P.xgcd3(F7, P.ZERO, P.ZERO, P.ZERO)


def test_xgcd3_random_cubics():
    rng = random.Random(3)
    for _ in range(500):
        u1, u2 = random_monic(F101, 3, rng), random_monic(F101, 3, rng)
        if rng.random() < 0.5:
            common = random_monic(F101, 1, rng)
            u1 = P.mul(F101, common, random_monic(F101, 2, rng))
            u2 = P.mul(F101, common, random_monic(F101, 2, rng))
        v12 = P.from_list(F101, [rng.randrange(101) for _ in range(3)])
        w, c1, c2, c3 = P.xgcd3(F101, u1, u2, v12)
        assert P.is_monic(w)
        combo = P.add(F101, P.add(F101, P.mul(F101, c1, u1), P.mul(F101, c2, u2)), P.mul(F101, c3, v12))
        assert combo == w
        for a in (u1, u2, v12):
            assert P.mod(F101, a, w) == P.ZERO
        assert w == sympy_gcd(F101, sympy_gcd(F101, u1, u2), v12)


def test_mod_inverse_examples():
    assert P.mod_inverse(F7, P.ONE, (1, 1)) == P.ONE
    assert P.mod_inverse(F7, (0, 1), (1, 1)) == (6,)
    m = (1, 1, 0, 1)
    b = P.mod_inverse(F13, (1, 0, 1), m)
    assert P.mod(F13, P.mul(F13, (1, 0, 1), b), m) == P.ONE


def test_mod_inverse_not_coprime_carries_gcd():
    a = P.mul(F7, (2, 1), (3, 1))
    m = P.mul(F7, (2, 1), (5, 1))
    with pytest.raises(NotCoprime) as exc:
        P.mod_inverse(F7, a, m)
    assert exc.value.gcd == (2, 1)


def test_resultant_examples():
    u = (1, 2, 3, 1)
    assert P.resultant_cubics(F7, u, u)[0] == 0
    r, _ = P.resultant_cubics(F7, (0, 0, 0, 1), (1, 0, 0, 1))
    assert r == 1 == sylvester_resultant((0, 0, 0, 1), (1, 0, 0, 1), 7)


def test_resultant_random_cubics():
    """Sylvester determinant and xgcd inverse as independent references, 10^4 pairs."""
    rng = random.Random(4)
    F = F101
    coprime = 0
    for _ in range(10_000):
        u1, u2 = random_monic(F, 3, rng), random_monic(F, 3, rng)
        ops = OpCount()
        r, i = P.resultant_cubics(F, u1, u2, ops)
        assert ops.as_tuple() == (0, 15, 12)
        assert r == sylvester_resultant(u1, u2, F.p)
        if r:
            coprime += 1
            inv = P.mod_inverse(F, u1, u2)
            assert i == P.scale(F, inv, r)
        else:
            assert P.gcd(F, u1, u2) != P.ONE
    assert coprime > 9_000


def test_resultant_requires_monic_cubics():
    with pytest.raises(ValueError):
        P.resultant_cubics(F7, (1, 1), (1, 0, 0, 1))


@given(coeff_lists(), coeff_lists(5))
def test_divrem_round_trip(a, b):
    F = F101
    a, b = P.from_list(F, a), P.from_list(F, b)
    if not b:
        return
    q, r = P.divrem(F, a, b)
    assert len(r) < len(b)
    assert P.add(F, P.mul(F, q, b), r) == a
    if len(b) == 1:
        assert r == P.ZERO


def test_divrem_round_trip_bulk():
    rng = random.Random(5)
    F = F13
    for _ in range(10_000):
        a = P.from_list(F, [rng.randrange(13) for _ in range(rng.randrange(10))])
        b = P.from_list(F, [rng.randrange(13) for _ in range(rng.randrange(1, 6))])
        if not b:
            continue
        q, r = P.divrem(F, a, b)
        assert len(r) < len(b)
        assert naive_sub(a, naive_mul(q, b, 13), 13) == r


@given(coeff_lists(), coeff_lists(5))
def test_exact_div_of_product(a, b):
    F = F101
    a, b = P.from_list(F, a), P.from_list(F, b)
    if b:
        assert P.exact_div(F, P.mul(F, a, b), b) == a


@given(coeff_lists(), coeff_lists())
def test_mul_matches_naive(a, b):
    F = F101
    a, b = P.from_list(F, a), P.from_list(F, b)
    assert P.mul(F, a, b) == naive_mul(a, b, 101)


@given(coeff_lists(), st.integers(0, 100), st.integers(0, 100))
def test_taylor_shift(a, t, pt):
    F = F101
    a = P.from_list(F, a)
    shifted = P.taylor_shift(F, a, t)
    assert P.evaluate(F, shifted, pt) == P.evaluate(F, a, (pt + t) % 101)
    assert P.taylor_shift(F, shifted, -t % 101) == a


def test_text_format_round_trip():
    a = P.from_list(F101, [1, 0, 2])
    assert P.format_poly(a) == "[1,0,2]"
    assert P.parse_poly(F101, "[1,0,2]") == a
    assert P.parse_poly(F101, " [ 1, 0, 2, 0 ] ") == a
    assert P.parse_poly(F101, "[]") == P.ZERO
