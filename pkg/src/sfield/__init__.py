"""Exact arithmetic in the pair-model S-field, with division by zero.

Elements are pairs (x, y) over a scalar ring (rationals, GF(p) or the
integers).  Scalars embed as (r, 0); ``alpha/0`` is the element (0, alpha),
which is the one whose product with zero gives back alpha.
"""

from .core import (
    Decomposition,
    SElement,
    alpha_index,
    base_unit,
    compose,
    decompose,
    embed_scalar,
    extract_scalar,
    is_scalar,
    render_canonical,
    render_coords,
    s_add,
    s_mul,
    s_neg,
    s_one,
    s_sub,
    s_zero,
    scalar_mul,
    standard_base,
)
from .division import (
    DivisionOutcome,
    Outcome,
    div_by_scalar,
    div_by_zero,
    divide,
    is_reversible,
    verify_quotient,
)
from .errors import (
    BackendMismatch,
    ConstructionError,
    DivisionError,
    Indeterminate,
    NoSolution,
    NotAScalar,
    NotAScalarDivisor,
    NotInvertible,
    SFieldError,
    WitnessNotFound,
)
from .scalar import (
    INTEGER,
    RATIONAL,
    IntegerRing,
    PrimeField,
    RationalField,
    ScalarValue,
    parse_ring,
    ring_add,
    ring_inverse,
    ring_mul,
    ring_neg,
)

__version__ = "0.1.0"
