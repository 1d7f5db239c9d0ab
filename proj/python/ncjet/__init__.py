"""Symbolic calculus on noncommutative cyclic jet spaces.

Values are passed and returned as strings in the expression grammar of the
``ncjet`` command line tool, e.g. ``cyc(a*a_x)`` or ``op(D^3 + x*D*1 + 1*D*x)``.
"""

from ._ncjet import (
    Context,
    Error,
    ParseError,
    PreconditionError,
    ResourceError,
    adjoint,
    couple,
    euler,
    evaluate,
    identities,
    is_hamiltonian,
    is_skew_adjoint,
    is_trivial,
    jacobi,
    normalize,
    poisson,
    reduce,
    schouten,
    selftest,
    subst_check,
    times,
    total_derivative,
)

__all__ = [
    "Context",
    "Error",
    "ParseError",
    "PreconditionError",
    "ResourceError",
    "adjoint",
    "couple",
    "euler",
    "evaluate",
    "identities",
    "is_hamiltonian",
    "is_skew_adjoint",
    "is_trivial",
    "jacobi",
    "normalize",
    "poisson",
    "reduce",
    "schouten",
    "selftest",
    "subst_check",
    "times",
    "total_derivative",
]
