"""Boundary-symbol calculus: exact multipliers and the h_-2, h_-3, h_-4 identities."""

from .alpha_expr import CANONICAL_ALPHAS, AlphaExpression, AlphaSum, compare
from .calculus import (
    LambdaTerm,
    c_multiplier,
    d_multiplier,
    half_derivative,
    h4_values,
    normalization,
    verify_all,
    verify_h2,
    verify_h3,
    verify_h4,
)
from .gaussian import gaussian_moment

__all__ = [
    "CANONICAL_ALPHAS",
    "AlphaExpression",
    "AlphaSum",
    "LambdaTerm",
    "c_multiplier",
    "compare",
    "d_multiplier",
    "gaussian_moment",
    "h4_values",
    "half_derivative",
    "normalization",
    "verify_all",
    "verify_h2",
    "verify_h3",
    "verify_h4",
]
