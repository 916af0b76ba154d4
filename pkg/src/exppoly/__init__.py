"""Exact symbolic computation in the ring of exponential polynomials.

The public surface mirrors the library layout:

- constants: the symbolic constant field (Context, Const, formal_exp, ...)
- expring:   the ring of exponential polynomials (ExpPoly, support, ...)
- lattice:   integer lattices, Hermite normal form, torus cosets
- ritt:      the Laurent correspondence, divisibility and factorization
- zeros:     integer-zero patterns and the Case-1 common-divisor pipeline
- unitcheck: unit-equation solution vectors, degeneracy, Schanuel audits
- parser:    the expression grammar shared with the CLI
"""

from .constants import (
    Const,
    Context,
    Generator,
    const_add,
    const_eq,
    const_inv,
    const_mul,
    formal_exp,
    rational_ratio,
    transcendence_degree,
)
from .errors import ExpPolyError
from .expring import (
    ExpPoly,
    Support,
    cos_poly,
    ep_add,
    ep_mul,
    ep_neg,
    is_simple,
    is_unit,
    normalize,
    sin_poly,
    substitute_affine,
    support,
)

__all__ = [
    "Const",
    "Context",
    "ExpPoly",
    "ExpPolyError",
    "Generator",
    "Support",
    "const_add",
    "const_eq",
    "const_inv",
    "const_mul",
    "cos_poly",
    "ep_add",
    "ep_mul",
    "ep_neg",
    "formal_exp",
    "is_simple",
    "is_unit",
    "normalize",
    "rational_ratio",
    "sin_poly",
    "substitute_affine",
    "support",
    "transcendence_degree",
]
