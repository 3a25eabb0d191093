"""Division by nonzero scalars and division by zero over the pair model."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .core import (
    Decomposition,
    SElement,
    compose,
    decompose,
    embed_scalar,
    extract_scalar,
    is_scalar,
    s_add,
    s_sub,
    scalar_mul,
    standard_base,
)
from .errors import (
    BackendMismatch,
    DivisionError,
    Indeterminate,
    NoSolution,
    NotAScalarDivisor,
    NotInvertible,
)
from .scalar import ScalarValue


class Outcome(enum.Enum):
    QUOTIENT = "Quotient"
    INDETERMINATE = "Indeterminate"
    NO_SOLUTION = "NoSolution"
    NOT_INVERTIBLE = "NotInvertible"
    NOT_A_SCALAR_DIVISOR = "NotAScalarDivisor"


_ERRORS = {
    Outcome.INDETERMINATE: Indeterminate,
    Outcome.NO_SOLUTION: NoSolution,
    Outcome.NOT_INVERTIBLE: NotInvertible,
    Outcome.NOT_A_SCALAR_DIVISOR: NotAScalarDivisor,
}

_MESSAGES = {
    Outcome.INDETERMINATE: "0/0 has no unique value",
    Outcome.NO_SOLUTION: "0*q is always a scalar, so a non-scalar cannot be divided by zero",
    Outcome.NOT_INVERTIBLE: "divisor has no multiplicative inverse in the scalar ring",
    Outcome.NOT_A_SCALAR_DIVISOR: "divisor must be a scalar (second coordinate 0)",
}


@dataclass(frozen=True)
class DivisionOutcome:
    kind: Outcome
    value: Optional[SElement] = None

    @property
    def ok(self) -> bool:
        return self.kind is Outcome.QUOTIENT

    @property
    def message(self) -> str:
        return _MESSAGES.get(self.kind, "")

    def unwrap(self) -> SElement:
        """Return the quotient or raise the matching DivisionError."""
        if self.kind is Outcome.QUOTIENT:
            return self.value
        raise _ERRORS[self.kind](self.message)


def div_by_scalar(s: SElement, m: ScalarValue) -> SElement:
    """s / m for a nonzero invertible scalar m.

    With s = x - 1 + y*A the quotient is q1 - 1 + q2*A where
    q2 = y/m and q1 = (x + y - q2)/m.
    """
    if m.ring != s.ring:
        raise BackendMismatch(f"cannot divide a {s.ring} element by a {m.ring} scalar")
    if m.is_zero():
        raise NotInvertible("div_by_scalar needs a nonzero divisor; use div_by_zero")
    m_inv = m.inverse()
    d = decompose(s)
    q2 = m_inv * d.y
    q1 = m_inv * (d.x + d.y - q2)
    return compose(Decomposition(q1, q2))


def is_reversible(alpha: ScalarValue) -> bool:
    """Whether q0(alpha) satisfies q0(1) = a*(q0(alpha) + alpha) - alpha for some a.

    The second coordinate of the right side is a*alpha, so the only
    candidate is a = alpha^-1; the identity is then evaluated in full.
    """
    if not alpha.is_invertible():
        return False
    a_star = alpha.inverse()
    alpha_s = embed_scalar(alpha)
    rhs = s_sub(scalar_mul(a_star, s_add(standard_base(alpha), alpha_s)), alpha_s)
    return rhs == standard_base(alpha.ring.one)


def div_by_zero(alpha: ScalarValue) -> SElement:
    """alpha / 0, the reversible standard base (0, alpha)."""
    if alpha.is_zero():
        raise Indeterminate(_MESSAGES[Outcome.INDETERMINATE])
    if not alpha.ring.is_field:
        raise NotInvertible(f"division by zero is only defined over a field, not {alpha.ring}")
    if not is_reversible(alpha):
        raise NotInvertible(f"standard base of {alpha} is not reversible")
    return standard_base(alpha)


def verify_quotient(s: SElement, m: ScalarValue, q: SElement) -> bool:
    return scalar_mul(m, q) == s


def divide(s: SElement, t: SElement) -> DivisionOutcome:
    if s.ring != t.ring:
        raise BackendMismatch(f"cannot divide {s.ring} by {t.ring}")
    if not is_scalar(t):
        return DivisionOutcome(Outcome.NOT_A_SCALAR_DIVISOR)
    m = extract_scalar(t)
    try:
        if not m.is_zero():
            return DivisionOutcome(Outcome.QUOTIENT, div_by_scalar(s, m))
        if not is_scalar(s):
            return DivisionOutcome(Outcome.NO_SOLUTION)
        return DivisionOutcome(Outcome.QUOTIENT, div_by_zero(extract_scalar(s)))
    except Indeterminate:
        return DivisionOutcome(Outcome.INDETERMINATE)
    except NotInvertible:
        return DivisionOutcome(Outcome.NOT_INVERTIBLE)


__all__ = [
    "DivisionError",
    "DivisionOutcome",
    "Outcome",
    "div_by_scalar",
    "div_by_zero",
    "divide",
    "is_reversible",
    "verify_quotient",
]
