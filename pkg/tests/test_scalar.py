from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sfield import (
    INTEGER,
    RATIONAL,
    BackendMismatch,
    ConstructionError,
    NotInvertible,
    PrimeField,
    parse_ring,
    ring_add,
    ring_inverse,
    ring_mul,
    ring_neg,
)
from sfield.scalar import is_prime

from conftest import fractions, oracle_inverse


def q(a, b=1):
    return RATIONAL.scalar(Fraction(a, b))


def test_rational_add():
    assert ring_add(q(1, 2), q(1, 3)) == q(5, 6)
    assert ring_add(RATIONAL.zero, q(7, 9)) == q(7, 9)


def test_rational_mul():
    assert ring_mul(q(2, 3), q(3, 4)) == q(1, 2)
    assert ring_mul(RATIONAL.one, q(-5, 8)) == q(-5, 8)


def test_rational_neg_and_inverse():
    assert ring_neg(q(1, 2)) == q(-1, 2)
    assert ring_neg(RATIONAL.zero) == RATIONAL.zero
    assert ring_inverse(q(2, 3)) == q(3, 2)
    assert ring_inverse(RATIONAL.one) == RATIONAL.one


def test_gf5_examples():
    F = PrimeField(5)
    assert ring_add(F.scalar(3), F.scalar(4)) == F.scalar(7 % 5)
    assert ring_mul(F.scalar(3), F.scalar(4)) == F.scalar(12 % 5)
    assert ring_neg(F.scalar(3)) == F.scalar(5 - 3)
    # brute scan of residues
    assert ring_inverse(F.scalar(3)).value == oracle_inverse(3, 5)[0] == 2


def test_rational_is_normalized():
    a = RATIONAL.scalar(Fraction(6, -4))
    assert (a.value.numerator, a.value.denominator) == (-3, 2)
    assert RATIONAL.scalar(a) is a


def test_render():
    assert str(q(3, 1)) == "3"
    assert str(q(-7, 4)) == "-7/4"
    assert str(PrimeField(5).scalar(-1)) == "4"
    assert str(INTEGER.scalar(-12)) == "-12"


@pytest.mark.parametrize("a,b", [
    (RATIONAL.one, PrimeField(5).one),
    (PrimeField(3).one, PrimeField(5).one),
    (INTEGER.one, RATIONAL.one),
])
def test_mixed_backends_rejected(a, b):
    with pytest.raises(BackendMismatch):
        ring_add(a, b)
    with pytest.raises(BackendMismatch):
        ring_mul(a, b)


def test_inverse_errors():
    with pytest.raises(NotInvertible):
        ring_inverse(RATIONAL.zero)
    with pytest.raises(NotInvertible):
        ring_inverse(PrimeField(7).zero)
    with pytest.raises(NotInvertible):
        ring_inverse(INTEGER.scalar(2))
    assert ring_inverse(INTEGER.scalar(-1)) == INTEGER.scalar(-1)


@pytest.mark.parametrize("p", [0, 1, 4, 9, 91, 2**31 + 11])
def test_bad_moduli(p):
    with pytest.raises(ConstructionError):
        PrimeField(p)


def test_primality_matches_sieve():
    limit = 500
    sieve = [True] * limit
    sieve[0] = sieve[1] = False
    for i in range(2, limit):
        if sieve[i]:
            for j in range(i * i, limit, i):
                sieve[j] = False
    assert [n for n in range(limit) if is_prime(n)] == [n for n in range(limit) if sieve[n]]


def test_parse_ring():
    assert parse_ring("rational") == RATIONAL
    assert parse_ring("gf:7") == PrimeField(7)
    assert parse_ring("GF 11") == PrimeField(11)
    assert parse_ring("integer") == INTEGER
    with pytest.raises(ConstructionError):
        parse_ring("gf:8")
    with pytest.raises(ConstructionError):
        parse_ring("reals")


def test_prime_field_from_fraction():
    F = PrimeField(7)
    assert F.scalar(Fraction(1, 2)) == F.scalar(4)
    with pytest.raises(NotInvertible):
        F.scalar(Fraction(1, 7))


def test_scalars_are_immutable():
    a = q(1)
    with pytest.raises(AttributeError):
        a.value = 2


@given(fractions, fractions, fractions)
def test_rational_ring_axioms(a, b, c):
    a, b, c = q(a), q(b), q(c)
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + RATIONAL.zero == a
    assert a * RATIONAL.one == a
    assert a + (-a) == RATIONAL.zero


@given(st.sampled_from([2, 3, 5, 7, 13, 101]), st.data())
def test_prime_field_axioms(p, data):
    F = PrimeField(p)
    a, b, c = (F.scalar(data.draw(st.integers(-500, 500))) for _ in range(3))
    assert 0 <= a.value < p
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + (-a) == F.zero
    if not a.is_zero():
        assert a * a.inverse() == F.one


@given(fractions.filter(lambda f: f != 0))
def test_rational_inverse(a):
    a = q(a)
    assert a * ring_inverse(a) == RATIONAL.one


@given(fractions)
def test_normalization_idempotent(a):
    v = q(a)
    assert RATIONAL.scalar(v.value) == v
    assert v.value.denominator > 0
