"""Boundary-symbol integral calculus for the scalar Laplacian.

After the r-integration every boundary symbol contributes profiles
``Lambda^(k-1) / (Lambda + z)^(l+1-alpha)``; applying the half derivative
``(1/(2 Lambda)) d/dLambda`` n-1 times and setting ``z = Lambda`` yields the
multipliers c_{nkl}.  Together with the Gamma factors of the remaining
integrations they form d_{kljn}.  Summing the tabulated d-combinations of
each order re-derives the universal constants of the boundary invariants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import sympy

from ..errors import InternalConsistencyError, ValidationError
from ..special import gamma
from ..predict import kappa, kappa1_closed, kappa3_closed, kappa4_closed, kappa5_closed
from .alpha_expr import (
    ALPHA,
    CANONICAL_ALPHAS,
    REL_TOL,
    AlphaExpression,
    AlphaSum,
    Comparison,
    affine,
    compare,
    poly,
)

# ---------------------------------------------------------------- Lambda terms


@dataclass(frozen=True)
class LambdaTerm:
    """coeff(alpha) * Lambda^a * (Lambda + z)^(b0 + b1 alpha)."""

    coeff: sympy.Poly
    a: int
    b: tuple[Fraction, Fraction]

    def evaluate(self, lam: float, z: float, alpha: float) -> float:
        c = float(self.coeff.eval(sympy.Float(alpha, 30)))
        return c * lam**self.a * (lam + z) ** (float(self.b[0]) + float(self.b[1]) * alpha)


def _b_poly(b) -> sympy.Poly:
    return poly(sympy.Rational(b[0].numerator, b[0].denominator) + sympy.Rational(b[1].numerator, b[1].denominator) * ALPHA)


def half_derivative(term: LambdaTerm) -> list[LambdaTerm]:
    """(1/(2 Lambda)) d/dLambda of one term: at most two terms, zero coefficients dropped."""
    out = []
    if term.a != 0:
        out.append(LambdaTerm(term.coeff * poly(sympy.Rational(term.a, 2)), term.a - 2, term.b))
    if term.b != (0, 0):
        c = term.coeff * _b_poly(term.b) * poly(sympy.Rational(1, 2))
        out.append(LambdaTerm(c, term.a - 1, (term.b[0] - 1, term.b[1])))
    return [t for t in out if not t.coeff.is_zero]


def _collect(terms: list[LambdaTerm]) -> list[LambdaTerm]:
    acc: dict = {}
    for t in terms:
        key = (t.a, t.b)
        acc[key] = acc[key] + t.coeff if key in acc else t.coeff
    return [LambdaTerm(c, a, b) for (a, b), c in sorted(acc.items()) if not c.is_zero]


def apply_half_derivative(terms: list[LambdaTerm], times: int) -> list[LambdaTerm]:
    for _ in range(times):
        terms = _collect([u for t in terms for u in half_derivative(t)])
    return terms


def profile(k: int, l: int) -> LambdaTerm:
    """Lambda^(k-1) (Lambda + z)^(alpha - l - 1)."""
    return LambdaTerm(poly(1), k - 1, (Fraction(-(l + 1)), Fraction(1)))


@lru_cache(maxsize=None)
def c_multiplier(n: int, k: int, l: int) -> AlphaExpression:
    """c_{nkl} as 2^(alpha + e) P(alpha); the Lambda exponent is checked exactly."""
    if n < 1:
        raise ValidationError("c_{nkl} needs n >= 1")
    terms = apply_half_derivative([profile(k, l)], n - 1)
    if not terms:
        return AlphaExpression(poly(0), affine(0, 1))
    target = (Fraction(-(l + 2 * n - k)), Fraction(1))
    for t in terms:
        # z = Lambda turns (Lambda+z)^b into 2^b Lambda^b
        total = (t.a + t.b[0], t.b[1])
        if total != target:
            raise InternalConsistencyError(
                f"c_{{{n}{k}{l}}}: Lambda exponent {total} differs from the homogeneity value {target}"
            )
    e_min = min(t.b[0] for t in terms)
    P = poly(0)
    for t in terms:
        P = P + t.coeff * poly(2 ** int(t.b[0] - e_min))
    return AlphaExpression(P, (e_min, Fraction(1)))


@lru_cache(maxsize=None)
def d_multiplier(k: int, l: int, j: int, n: int) -> AlphaExpression:
    """d_{kljn} = 2 i^k (-1)^(n+k+1) pi^2 Gamma(l+1-alpha) c_{nkl} / ((n-1)! Gamma((j+l-k-alpha)/2 + n))."""
    c = c_multiplier(n, k, l)
    sign = -1 if (n + k + 1) % 2 else 1
    scal = sympy.Rational(2 * sign, math.factorial(n - 1))
    return AlphaExpression(
        c.poly * poly(scal),
        (c.two_exp[0], c.two_exp[1]),
        Fraction(2),
        (affine(l + 1, -1),),
        (affine(Fraction(j + l - k, 2) + n, Fraction(-1, 2)),),
        poly(1),
        k,
    )


def d_code(code: str) -> AlphaExpression:
    """d from its four-digit label 'kljn'."""
    k, l, j, n = (int(ch) for ch in code)
    return d_multiplier(k, l, j, n)


# ---------------------------------------------------------------- normalization


def normalization(S: complex, m: int = 2) -> complex:
    """Convert a d-combination into a coefficient in units of (4 pi)^(-m/2).

    Chain: the 1/(2 pi)^(m+1) prefactor of the symbol integral, the
    Gaussian factor pi^((m-1)/2) sqrt(g), and an overall minus sign.
    The result does not depend on m.
    """
    return -(2 * math.pi) ** (-(m + 1)) * math.pi ** ((m - 1) / 2) * S * (4 * math.pi) ** (m / 2)


# ---------------------------------------------------------------- tables

I = 1j
H3_COMBINATION = ((-I / 2, "1002"), (0.25, "0101"), (-I, "1003"), (-1 / 8, "0121"), (-1 / 8, "0211"))

# h_{-4}: per metric channel, the alpha~, beta, gamma, delta, epsilon blocks as printed
H4_TABLES = {
    "trace_square": {  # g^ab g^cd g_ab,r g_cd,r
        "alpha": ((-1 / 4, "2003"), (1 / 4, "0003"), (-3 / 2, "2004"), (1 / 2, "0004"), (-3, "2005")),
        "beta": ((3 / 128, "0151"), (1 / 64, "0151"), (I / 8, "1123"), (I / 16, "1122"), (-I / 4, "1103"),
                 (-I / 8, "1102"), (-1 / 32, "0111")),
        "gamma": ((3 / 128, "0241"), (1 / 64, "0241"), (I / 8, "1213"), (1 / 32, "0201"), (-3 / 64, "0221"),
                  (I / 16, "1212"), (1 / 64, "0221")),
        "delta": ((5 / 192, "0331"), (-1 / 32, "0311")),
        "epsilon": ((1 / 128, "0421"),),
    },
    "cross": {  # g^ab g^cd g_ac,r g_bd,r
        "alpha": ((1, "2003"), (-1, "0003"), (4, "2004"), (1, "0004"), (-6, "2005")),
        "beta": ((3 / 64, "0151"), (1 / 32, "0151"), (I / 4, "1123"), (-1 / 8, "0131"), (1 / 8, "0111")),
        "gamma": ((3 / 64, "0241"), (1 / 32, "0241"), (I / 4, "1213"), (-1 / 8, "0221"), (1 / 8, "0201")),
        "delta": ((5 / 96, "0331"), (-1 / 12, "0311")),
        "epsilon": ((1 / 64, "0421"),),
    },
    "second_derivative": {  # g^ab g_ab,rr
        "alpha": ((-1, "2003"), (1 / 2, "0003"), (-2, "2004")),
        "beta": ((1 / 16, "0131"), (-1 / 8, "0111")),
        "gamma": ((1 / 16, "0221"), (-1 / 8, "0201")),
        "delta": ((1 / 24, "0311"),),
        "epsilon": (),
    },
}


def h4_channel_closed(channel: str, alpha):
    g = gamma((1 - alpha) / 2)
    if channel == "trace_square":
        return (3 * alpha**2 - 16 * alpha - 27) / (384 * (alpha - 6)) * g
    if channel == "cross":
        return 5 * (9 + 4 * alpha - alpha**2) / (192 * (alpha - 6)) * g
    if channel == "second_derivative":
        return (alpha + 3) / 48 * g
    raise ValidationError(f"unknown channel {channel}")


def combination(pairs) -> AlphaSum:
    return AlphaSum.of((w, d_code(c)) for w, c in pairs)


def channel_sum(channel: str) -> AlphaSum:
    blocks = H4_TABLES[channel]
    return AlphaSum.of((w, d_code(c)) for blk in ("alpha", "beta", "gamma", "delta", "epsilon") for w, c in blocks[blk])


# ---------------------------------------------------------------- verifications


@dataclass
class IdentityReport:
    name: str
    comparisons: dict = field(default_factory=dict)
    recovered: dict = field(default_factory=dict)
    ok: bool = True

    def add(self, key: str, cmp: Comparison):
        self.comparisons[key] = cmp
        self.ok = self.ok and cmp.equal

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "pass": self.ok,
            "checks": {
                k: {"pass": c.equal, "max_rel_dev": c.max_rel_dev, "skipped_alpha": list(c.skipped),
                    "per_alpha": {repr(a): v for a, v in c.per_alpha.items()}}
                for k, c in self.comparisons.items()
            },
        }


def _as_tuple(alphas):
    if isinstance(alphas, (int, float, complex)):
        return (alphas,)
    return tuple(alphas)


def h2_closed(alpha):
    return math.pi**1.5 * gamma((1 - alpha) / 2)


def verify_h2(alphas=CANONICAL_ALPHAS, rel_tol: float = REL_TOL) -> IdentityReport:
    alphas = _as_tuple(alphas)
    rep = IdentityReport("h2")
    d = d_code("0001")
    rep.add("d0001_vs_closed_form", compare(d, h2_closed, alphas, rel_tol))
    kbar = lambda a: -normalization(d(a))
    rep.add("kappa_bar_vs_kappa", compare(kbar, kappa, alphas, rel_tol))
    rep.recovered["kappa_bar"] = {a: kbar(a) for a in alphas if a not in rep.comparisons["kappa_bar_vs_kappa"].skipped}
    return rep


def h3_closed(alpha):
    return math.pi * (alpha - 4) / (4 * (3 - alpha)) * gamma((2 - alpha) / 2) * math.sqrt(math.pi)


def verify_h3(alphas=CANONICAL_ALPHAS, rel_tol: float = REL_TOL) -> IdentityReport:
    alphas = _as_tuple(alphas)
    if any(a == 3 for a in alphas):
        raise ValidationError("h3 identity is singular at alpha = 3")
    rep = IdentityReport("h3")
    S = combination(H3_COMBINATION)
    rep.add("combination_vs_closed_form", compare(S, h3_closed, alphas, rel_tol))
    # g^ab_{,r} g_ab = 2 L_aa
    k1 = lambda a: 2 * normalization(S(a))
    rep.add("kappa1_vs_closed_form", compare(k1, kappa1_closed, alphas, rel_tol))
    rep.recovered["kappa1"] = {a: k1(a) for a in alphas}
    return rep


@dataclass(frozen=True)
class H4Values:
    A: complex
    B: complex
    C: complex
    kappa3: complex
    kappa4: complex
    kappa5: complex


def h4_values(alpha) -> H4Values:
    """(A, B, C) read off the channel sums, then the kappa^3..5 conversion."""
    A = normalization(channel_sum("second_derivative")(alpha))
    B = normalization(channel_sum("cross")(alpha))
    C = normalization(channel_sum("trace_square")(alpha))
    k = kappa(alpha)
    k3 = -2 * (A - k / 6)
    k4 = 4 * (C - k / 24)
    k5 = 4 * (B + k / 8 - k3 / 4)
    return H4Values(A, B, C, k3, k4, k5)


def verify_h4(alphas=CANONICAL_ALPHAS, rel_tol: float = REL_TOL, kappa_tol: float = 1e-9) -> IdentityReport:
    alphas = _as_tuple(alphas)
    if any(a == 6 for a in alphas):
        raise ValidationError("h4 identity is singular at alpha = 6")
    rep = IdentityReport("h4")
    for ch in H4_TABLES:
        S = channel_sum(ch)
        rep.add(f"channel:{ch}", compare(lambda a, S=S: normalization(S(a)), lambda a, ch=ch: h4_channel_closed(ch, a),
                                         alphas, rel_tol))
    for name, closed in (("kappa3", kappa3_closed), ("kappa4", kappa4_closed), ("kappa5", kappa5_closed)):
        rep.add(name, compare(lambda a, name=name: getattr(h4_values(a), name), closed, alphas, kappa_tol))
    rep.recovered = {a: h4_values(a) for a in alphas}
    return rep


def verify_all(alphas=CANONICAL_ALPHAS) -> dict:
    reps = [verify_h2(alphas), verify_h3(alphas), verify_h4(alphas)]
    return {"pass": all(r.ok for r in reps), "alphas": list(alphas), "reports": [r.to_json() for r in reps]}
