import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperjac.errors import EvenCharacteristic, NotPrime, ZeroInverse
from hyperjac.ff import FieldCtx, OpCount

from oracles import brute_inverse

PRIMES = [3, 7, 11, 13, 101, 65537]


def test_construction_rejects_bad_moduli():
    with pytest.raises(EvenCharacteristic):
        FieldCtx(2)
    with pytest.raises(NotPrime):
        FieldCtx(15)
    with pytest.raises(NotPrime):
        FieldCtx(1)


@pytest.mark.parametrize("p,a,b,want", [(7, 5, 4, 2), (11, 10, 10, 9), (13, 0, 9, 9)])
def test_add(p, a, b, want):
    ops = OpCount()
    assert FieldCtx(p).add(a, b, ops) == want
    assert ops.as_tuple() == (0, 0, 1)


@pytest.mark.parametrize("p,a,b,want", [(7, 3, 5, 1), (13, 6, 6, 10), (101, 1, 42, 42)])
def test_mul(p, a, b, want):
    ops = OpCount()
    assert FieldCtx(p).mul(a, b, ops) == want
    assert ops.mul == 1


def test_square_counts_as_mul():
    ops = OpCount()
    assert FieldCtx(13).sqr(6, ops) == 10
    assert ops.as_tuple() == (0, 1, 0)


@pytest.mark.parametrize("p,a,want", [(7, 3, 5), (11, 1, 1), (101, 17, 6)])
def test_inv(p, a, want):
    ops = OpCount()
    assert FieldCtx(p).inv(a, ops) == want
    assert want == brute_inverse(a, p)
    assert ops.inv == 1


def test_inv_zero():
    with pytest.raises(ZeroInverse):
        FieldCtx(7).inv(0, OpCount())


@pytest.mark.parametrize("p,a,want", [(7, 4, 2), (7, 3, 5), (13, 1, 7)])
def test_halve(p, a, want):
    ops = OpCount()
    assert FieldCtx(p).halve(a, ops) == want
    assert ops.as_tuple() == (0, 0, 1)


@pytest.mark.parametrize("c,p,a,want,cost", [(2, 7, 4, 1, 1), (3, 7, 3, 2, 2), (2, 7, 0, 0, 1)])
def test_small_scale(c, p, a, want, cost):
    ops = OpCount()
    assert FieldCtx(p).small_scale(a, c, ops) == want
    assert ops.add == cost and ops.mul == 0


def test_batch_invert_examples():
    F = FieldCtx(7)
    ops = OpCount()
    assert F.batch_invert([2, 3, 4], ops) == [4, 5, 2]
    assert ops.as_tuple() == (1, 6, 0)
    ops = OpCount()
    assert F.batch_invert([5], ops) == [3]
    assert ops.as_tuple() == (1, 0, 0)
    assert F.batch_invert([1, 1], OpCount()) == [1, 1]


def test_batch_invert_reports_index():
    with pytest.raises(ZeroInverse) as exc:
        FieldCtx(11).batch_invert([3, 4, 0, 5], OpCount())
    assert exc.value.index == 2


@given(st.sampled_from(PRIMES), st.integers(min_value=0, max_value=10**6))
def test_inverse_property(p, a):
    F = FieldCtx(p)
    a %= p
    if a:
        assert F.mul(a, F.inv(a, OpCount()), OpCount()) == 1


@given(st.sampled_from(PRIMES), st.integers(min_value=0, max_value=10**6))
def test_halve_of_double(p, a):
    F = FieldCtx(p)
    a %= p
    assert F.halve(F.add(a, a, OpCount()), OpCount()) == a
    assert F.halve(F.double(a, OpCount()), OpCount()) == a


@given(st.sampled_from(PRIMES), st.lists(st.integers(min_value=1, max_value=10**6), min_size=1, max_size=12))
def test_batch_invert_matches_inv(p, values):
    F = FieldCtx(p)
    values = [v % p or 1 for v in values]
    ops = OpCount()
    got = F.batch_invert(values, ops)
    assert got == [F.inv(v, OpCount()) for v in values]
    assert ops.as_tuple() == (1, 3 * (len(values) - 1), 0)


@given(st.lists(st.tuples(st.integers(0, 5), st.integers(0, 100), st.integers(0, 100)), max_size=10))
def test_counter_additivity(seq):
    F = FieldCtx(101)
    whole, first, second = OpCount(), OpCount(), OpCount()
    half = len(seq) // 2
    for idx, (op, a, b) in enumerate(seq):
        for ops in (whole, first if idx < half else second):
            [F.add, F.sub, F.mul, lambda x, y, o: F.inv(x or 1, o), lambda x, y, o: F.halve(x, o),
             lambda x, y, o: F.neg(x, o)][op](a, b, ops)
    assert first + second == whole
    assert whole - second == first


def test_opcount_format():
    assert str(OpCount(1, 79, 127)) == "I=1 M=79 A=127"
