"""Shared strategies and an independent plain-tuple model of the pair product.

The ``oracle_*`` helpers re-derive the pair arithmetic from its defining
formula on bare ints/Fractions, with no imports from the package, so they
can stand as an independent check on it.
"""

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import strategies as st

from sfield import RATIONAL, PrimeField, SElement


def oracle_mul(s, t, p=None):
    x, y = s
    u, v = t
    out = (x * u + y + v - x * v - y * u, y * v + x * v + y * u)
    return tuple(c % p for c in out) if p else out


def oracle_add(s, t, p=None):
    out = (s[0] + t[0], s[1] + t[1])
    return tuple(c % p for c in out) if p else out


def oracle_pairs(p):
    return list(product(range(p), repeat=2))


def oracle_quotients(s, m, p):
    """Every q with (m, 0) * q == s, by scanning all p^2 pairs."""
    return [q for q in oracle_pairs(p) if oracle_mul((m % p, 0), q, p) == tuple(c % p for c in s)]


def oracle_inverse(a, p):
    return [b for b in range(p) if a * b % p == 1]


def as_tuple(s: SElement):
    return (s.x.value, s.y.value)


fractions = st.fractions(min_value=-40, max_value=40, max_denominator=30)
nonzero_fractions = fractions.filter(lambda f: f != 0)


@st.composite
def rational_scalars(draw, nonzero=False):
    return RATIONAL.scalar(draw(nonzero_fractions if nonzero else fractions))


@st.composite
def rational_elements(draw):
    return SElement.of(RATIONAL, draw(fractions), draw(fractions))


@st.composite
def gf_elements(draw, p):
    ring = PrimeField(p)
    return SElement.of(ring, draw(st.integers(0, p - 1)), draw(st.integers(0, p - 1)))


def Q(*args):
    return Fraction(*args)


@pytest.fixture
def R():
    return RATIONAL


@pytest.fixture
def gf5():
    return PrimeField(5)
