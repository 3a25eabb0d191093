"""The pair model: elements (x, y) of R x R with the wheel-style product.

Addition is componentwise. Multiplication is

    (x, y) * (u, v) = (x*u + y + v - x*v - y*u,  y*v + x*v + y*u)

which is commutative but neither associative nor distributive.  The zero
pair (0, 0) times (x, y) gives (y, 0), so the second coordinate of an
element is exactly its index: the scalar obtained by multiplying by zero.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BackendMismatch, NotAScalar
from .scalar import Ring, ScalarValue


@dataclass(frozen=True)
class SElement:
    x: ScalarValue
    y: ScalarValue

    def __post_init__(self):
        if self.x.ring != self.y.ring:
            raise BackendMismatch(f"coordinates in {self.x.ring} and {self.y.ring}")

    @property
    def ring(self) -> Ring:
        return self.x.ring

    @classmethod
    def of(cls, ring: Ring, x, y) -> "SElement":
        """Build a pair from raw ints/Fractions (or scalars) in ``ring``."""
        return cls(ring.scalar(x), ring.scalar(y))

    def __add__(self, other):
        return s_add(self, other)

    def __sub__(self, other):
        return s_sub(self, other)

    def __mul__(self, other):
        return s_mul(self, other)

    def __neg__(self):
        return s_neg(self)

    def __str__(self):
        return render_coords(self)

    def __repr__(self):
        return f"SElement({self.x}, {self.y} | {self.ring})"


@dataclass(frozen=True)
class Decomposition:
    """Scalars x, y with s = x - 1 + y*A."""

    x: ScalarValue
    y: ScalarValue


def _same(s: SElement, t: SElement) -> None:
    if s.ring != t.ring:
        raise BackendMismatch(f"cannot combine {s.ring} and {t.ring} elements")


def s_zero(ring: Ring) -> SElement:
    return SElement(ring.zero, ring.zero)


def s_one(ring: Ring) -> SElement:
    """The unity (1, 0)."""
    return SElement(ring.one, ring.zero)


def s_add(s: SElement, t: SElement) -> SElement:
    _same(s, t)
    return SElement(s.x + t.x, s.y + t.y)


def s_neg(s: SElement) -> SElement:
    return SElement(-s.x, -s.y)


def s_sub(s: SElement, t: SElement) -> SElement:
    return s_add(s, s_neg(t))


def s_mul(s: SElement, t: SElement) -> SElement:
    _same(s, t)
    x, y, u, v = s.x, s.y, t.x, t.y
    return SElement(x * u + y + v - x * v - y * u, y * v + x * v + y * u)


def alpha_index(s: SElement) -> ScalarValue:
    """The scalar alpha with 0*s = alpha, i.e. the class s belongs to."""
    return s.y


def is_scalar(s: SElement) -> bool:
    return s.y.is_zero()


def embed_scalar(r: ScalarValue) -> SElement:
    return SElement(r, r.ring.zero)


def extract_scalar(s: SElement) -> ScalarValue:
    if not is_scalar(s):
        raise NotAScalar(f"{render_coords(s)} is not a scalar (index {s.y})")
    return s.x


def base_unit(ring: Ring) -> SElement:
    """A = q0(1) + 1 = (1, 1)."""
    return s_add(standard_base(ring.one), s_one(ring))


def standard_base(alpha: ScalarValue) -> SElement:
    # q0(1) is designated (0, 1); every q0(alpha) = alpha*(q0(1) + 1) - 1 then
    # reduces to (0, alpha).
    return SElement(alpha.ring.zero, alpha)


def decompose(s: SElement) -> Decomposition:
    return Decomposition(s.x, s.y)


def compose(d: Decomposition) -> SElement:
    """Evaluate x - 1 + y*A with the structure's own operations."""
    ring = d.x.ring
    head = s_sub(embed_scalar(d.x), s_one(ring))
    return s_add(head, s_mul(embed_scalar(d.y), base_unit(ring)))


def scalar_mul(m: ScalarValue, s: SElement) -> SElement:
    """m*s via the closed form m*(x - y) + y - 1 + (m*y)*A."""
    if m.ring != s.ring:
        raise BackendMismatch(f"cannot scale a {s.ring} element by a {m.ring} scalar")
    return SElement(m * (s.x - s.y) + s.y, m * s.y)


def render_coords(s: SElement) -> str:
    return f"({s.x}, {s.y})"


def render_canonical(s: SElement) -> str:
    d = decompose(s)
    return f"{d.x} - 1 + {d.y}*A"
