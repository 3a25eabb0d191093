"""Exact scalar rings: the rationals, prime fields GF(p), and the integers.

Every scalar carries the ring it belongs to, and arithmetic between scalars
of different rings is rejected rather than coerced.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterator, Union

from .errors import BackendMismatch, ConstructionError, NotInvertible

MAX_MODULUS = 2**31

Raw = Union[int, Fraction]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Ring:
    """A commutative ring with unity, used as the coordinate ring of pairs."""

    name: str
    is_field: bool

    def scalar(self, value: Raw | "ScalarValue") -> "ScalarValue":
        if isinstance(value, ScalarValue):
            if value.ring != self:
                raise BackendMismatch(f"{value.ring} scalar used where {self} expected")
            return value
        return ScalarValue(self, self._normalize(value))

    @property
    def zero(self) -> "ScalarValue":
        return ScalarValue(self, self._normalize(0))

    @property
    def one(self) -> "ScalarValue":
        return ScalarValue(self, self._normalize(1))

    def _normalize(self, value: Raw) -> Raw:
        raise NotImplementedError

    def _invert(self, value: Raw) -> Raw:
        raise NotImplementedError

    def _render(self, value: Raw) -> str:
        return str(value)


@dataclass(frozen=True)
class RationalField(Ring):
    name = "rational"
    is_field = True

    def _normalize(self, value):
        if isinstance(value, bool) or not isinstance(value, Rational):
            raise TypeError(f"not an exact rational: {value!r}")
        # Fraction keeps gcd(|num|, den) == 1 and den > 0.
        return Fraction(value)

    def _invert(self, value):
        return 1 / value

    def __str__(self):
        return "rational"


@dataclass(frozen=True)
class IntegerRing(Ring):
    name = "integer"
    is_field = False

    def _normalize(self, value):
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise ValueError(f"{value} is not an integer")
            value = value.numerator
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"not an integer: {value!r}")
        return value

    def _invert(self, value):
        if value in (1, -1):
            return value
        raise NotInvertible(f"{value} has no inverse in the integers")

    def __str__(self):
        return "integer"


@dataclass(frozen=True)
class PrimeField(Ring):
    modulus: int
    name = "gf"
    is_field = True

    def __post_init__(self):
        p = self.modulus
        if isinstance(p, bool) or not isinstance(p, int):
            raise ConstructionError(f"modulus must be an integer, got {p!r}")
        if p > MAX_MODULUS:
            raise ConstructionError(f"modulus {p} exceeds 2^31")
        if not is_prime(p):
            raise ConstructionError(f"modulus {p} is not prime")

    def _normalize(self, value):
        p = self.modulus
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise NotInvertible(f"denominator of {value} vanishes mod {p}")
            return value.numerator * pow(value.denominator, -1, p) % p
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"not an integer residue: {value!r}")
        return value % p

    def _invert(self, value):
        return pow(value, -1, self.modulus)

    def elements(self) -> Iterator["ScalarValue"]:
        """All residues in ascending order."""
        for k in range(self.modulus):
            yield ScalarValue(self, k)

    def __str__(self):
        return f"GF({self.modulus})"


RATIONAL = RationalField()
INTEGER = IntegerRing()


class ScalarValue:
    """An immutable element of a :class:`Ring`."""

    __slots__ = ("ring", "value")

    def __init__(self, ring: Ring, value: Raw):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("ScalarValue is immutable")

    def _check(self, other: "ScalarValue") -> None:
        if not isinstance(other, ScalarValue):
            raise TypeError(f"expected ScalarValue, got {type(other).__name__}")
        if self.ring != other.ring:
            raise BackendMismatch(f"cannot combine {self.ring} and {other.ring} scalars")

    def __add__(self, other):
        self._check(other)
        return ScalarValue(self.ring, self.ring._normalize(self.value + other.value))

    def __sub__(self, other):
        self._check(other)
        return ScalarValue(self.ring, self.ring._normalize(self.value - other.value))

    def __mul__(self, other):
        self._check(other)
        return ScalarValue(self.ring, self.ring._normalize(self.value * other.value))

    def __neg__(self):
        return ScalarValue(self.ring, self.ring._normalize(-self.value))

    def inverse(self) -> "ScalarValue":
        if self.value == 0:
            raise NotInvertible("zero has no multiplicative inverse")
        return ScalarValue(self.ring, self.ring._invert(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def is_invertible(self) -> bool:
        if self.value == 0:
            return False
        return self.ring.is_field or self.value in (1, -1)

    def __eq__(self, other):
        if not isinstance(other, ScalarValue):
            return NotImplemented
        return self.ring == other.ring and self.value == other.value

    def __hash__(self):
        return hash((self.ring, self.value))

    def __str__(self):
        return self.ring._render(self.value)

    def __repr__(self):
        return f"ScalarValue({self.ring}, {self.value})"


def ring_add(a: ScalarValue, b: ScalarValue) -> ScalarValue:
    return a + b


def ring_mul(a: ScalarValue, b: ScalarValue) -> ScalarValue:
    return a * b


def ring_neg(a: ScalarValue) -> ScalarValue:
    return -a


def ring_inverse(a: ScalarValue) -> ScalarValue:
    """Multiplicative inverse; raises NotInvertible for zero or non-units."""
    return a.inverse()


def parse_ring(text: str) -> Ring:
    """Parse a backend name: ``rational``, ``integer``, ``gf:<p>`` or ``gf <p>``."""
    t = text.strip().lower()
    if t in ("rational", "q"):
        return RATIONAL
    if t in ("integer", "z"):
        return INTEGER
    for prefix in ("gf:", "gf "):
        if t.startswith(prefix):
            digits = t[len(prefix):].strip()
            if not digits.isdigit():
                raise ConstructionError(f"bad modulus in {text!r}")
            return PrimeField(int(digits))
    raise ConstructionError(f"unknown field {text!r}; use rational, integer or gf:<p>")
