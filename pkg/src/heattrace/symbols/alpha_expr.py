"""Exact alpha-dependent constants of the form

    i^k * 2^(e0 + e1 alpha) * pi^p * P(alpha) / Q(alpha) * prod Gamma(num) / prod Gamma(den)

with P, Q in Q[alpha] held exactly (sympy polynomials over QQ) and Gamma
arguments affine in alpha.  Only the Gamma and pi factors are evaluated in
floating point.  Equality is decided by evaluation at the canonical samples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

import sympy

from ..errors import PoleError
from ..special import gamma, is_gamma_pole

ALPHA = sympy.Symbol("alpha")
CANONICAL_ALPHAS = (-1.7, -0.9, -0.3, 0.3, 0.7, 1.4, 2.6, 2.9)
REL_TOL = 1e-11

Affine = tuple[Fraction, Fraction]  # (constant, coefficient of alpha)


def poly(expr) -> sympy.Poly:
    return sympy.Poly(expr, ALPHA, domain="QQ")


def affine(c0, c1=0) -> Affine:
    return (Fraction(c0), Fraction(c1))


def _aff_eval(a: Affine, alpha):
    return float(a[0]) + float(a[1]) * alpha


@dataclass(frozen=True)
class AlphaExpression:
    poly: sympy.Poly = field(default_factory=lambda: poly(1))
    two_exp: Affine = (Fraction(0), Fraction(0))
    pi_exp: Fraction = Fraction(0)
    gamma_num: tuple[Affine, ...] = ()
    gamma_den: tuple[Affine, ...] = ()
    poly_den: sympy.Poly = field(default_factory=lambda: poly(1))
    i_power: int = 0

    def __post_init__(self):
        object.__setattr__(self, "i_power", self.i_power % 4)

    # ---- algebra
    def __mul__(self, other):
        if isinstance(other, AlphaExpression):
            return AlphaExpression(
                self.poly * other.poly,
                (self.two_exp[0] + other.two_exp[0], self.two_exp[1] + other.two_exp[1]),
                self.pi_exp + other.pi_exp,
                self.gamma_num + other.gamma_num,
                self.gamma_den + other.gamma_den,
                self.poly_den * other.poly_den,
                self.i_power + other.i_power,
            )
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return AlphaExpression(self.poly * poly(sympy.Rational(q.numerator, q.denominator)), self.two_exp,
                                   self.pi_exp, self.gamma_num, self.gamma_den, self.poly_den, self.i_power)
        return NotImplemented

    __rmul__ = __mul__

    def times_i(self, k: int = 1) -> "AlphaExpression":
        return AlphaExpression(self.poly, self.two_exp, self.pi_exp, self.gamma_num, self.gamma_den,
                               self.poly_den, self.i_power + k)

    def __neg__(self):
        return self * -1

    # ---- evaluation
    def gamma_poles(self, alpha) -> bool:
        return any(is_gamma_pole(_aff_eval(g, alpha)) for g in self.gamma_num)

    def evaluate(self, alpha) -> complex:
        """Numeric value; raises PoleError at a pole of a numerator Gamma factor."""
        if self.gamma_poles(alpha):
            raise PoleError(f"Gamma pole at alpha={alpha}")
        p = _peval(self.poly, alpha)
        q = complex(_peval(self.poly_den, alpha))
        if q == 0:
            raise PoleError(f"rational denominator vanishes at alpha={alpha}")
        val = p / q
        val *= 2.0 ** _aff_eval(self.two_exp, alpha)
        val *= math.pi ** float(self.pi_exp)
        for g in self.gamma_num:
            val *= gamma(_aff_eval(g, alpha))
        for g in self.gamma_den:
            z = _aff_eval(g, alpha)
            val = 0.0 if is_gamma_pole(z) else val / gamma(z)
        return val * (1j ** self.i_power)

    def __call__(self, alpha):
        return self.evaluate(alpha)

    def describe(self) -> str:
        parts = [f"i^{self.i_power}", f"2^({self.two_exp[0]}+{self.two_exp[1]}a)", f"pi^{self.pi_exp}",
                 f"({self.poly.as_expr()})/({self.poly_den.as_expr()})"]
        parts += [f"G({g[0]}+{g[1]}a)" for g in self.gamma_num]
        parts += [f"/G({g[0]}+{g[1]}a)" for g in self.gamma_den]
        return " * ".join(parts)


def _peval(p: sympy.Poly, alpha) -> complex:
    out = 0j
    for c in p.all_coeffs():
        c = complex(Fraction(int(c.p), int(c.q)))
        out = out * alpha + c
    return out


@dataclass(frozen=True)
class AlphaSum:
    """Linear combination sum_j w_j X_j with exact complex-rational weights."""

    terms: tuple[tuple[complex, AlphaExpression], ...]

    @staticmethod
    def of(pairs: Iterable[tuple[complex, AlphaExpression]]) -> "AlphaSum":
        return AlphaSum(tuple(pairs))

    def evaluate(self, alpha) -> complex:
        return sum(w * x.evaluate(alpha) for w, x in self.terms)

    def __call__(self, alpha):
        return self.evaluate(alpha)


@dataclass(frozen=True)
class Comparison:
    equal: bool
    max_rel_dev: float
    per_alpha: dict
    skipped: tuple


def compare(lhs, rhs, alphas=CANONICAL_ALPHAS, rel_tol: float = REL_TOL) -> Comparison:
    """Decide lhs == rhs by evaluation at the sample points (poles are skipped and reported)."""
    devs, skipped = {}, []
    for a in alphas:
        try:
            x, y = lhs(a), rhs(a)
        except PoleError:
            skipped.append(a)
            continue
        scale = max(abs(x), abs(y))
        devs[a] = 0.0 if scale == 0 else abs(x - y) / scale
    mx = max(devs.values(), default=0.0)
    return Comparison(bool(devs) and mx <= rel_tol, mx, devs, tuple(skipped))


def constant(value) -> AlphaExpression:
    q = Fraction(value)
    return AlphaExpression(poly(sympy.Rational(q.numerator, q.denominator)))
