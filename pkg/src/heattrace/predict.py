"""Closed-form heat-trace coefficients and assembled small-t expansions.

Everything here is for scalar operators (fiber trace 1) with constant
boundary data per component, so every boundary integral is
``area * (local invariant)``.  Coefficients are complex-valued functions of
alpha; real alpha gives real floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
from scipy import special as sp

from .errors import ExceptionalAlphaError, PoleError, ValidationError
from .geometry import BoundaryComponent, ModelGeometry
from .regularize import RegularizedValue, exceptional_index, i_reg_weight, laurent_constant
from .special import EULER_C, gamma, real_if_close
from .weight import WeightProfile

SQRT_PI = math.sqrt(math.pi)


# ---------------------------------------------------------------- constants


def kappa(alpha):
    """kappa_alpha = Gamma((1 - alpha)/2) / 2; poles at alpha = 1, 3, 5, ..."""
    z = (1 - alpha) / 2
    try:
        return real_if_close(0.5 * gamma(z)) if isinstance(z, complex) else 0.5 * gamma(z)
    except PoleError:
        raise PoleError(f"kappa has a pole at alpha={alpha}") from None


def _gamma_half(alpha):
    return gamma((1 - alpha) / 2)


def kappa1_closed(alpha):
    return 0.5 * gamma((2 - alpha) / 2) * (alpha - 4) / (2 * (alpha - 3))


def kappa3_closed(alpha):
    return -(alpha - 1) / 24 * _gamma_half(alpha)


def kappa4_closed(alpha):
    return (7 - 8 * alpha + alpha**2) / (32 * (alpha - 6)) * _gamma_half(alpha)


def kappa5_closed(alpha):
    return (6 * alpha - 5 - alpha**2) / (16 * (alpha - 6)) * _gamma_half(alpha)


@dataclass(frozen=True)
class UniversalConstants:
    alpha: complex | float
    kappa: complex | float
    kappa_bar: complex | float
    kappa1: complex | float
    kappa3: complex | float
    kappa4: complex | float
    kappa5: complex | float
    euler_C: float = EULER_C


def universal_constants(alpha) -> UniversalConstants:
    """The structure constants of the boundary invariants at a given alpha.

    At alpha in {1, 2} every constant is replaced by the constant term of
    its Laurent expansion (regular ones are unchanged).
    """
    k = exceptional_index(alpha)
    funcs = (kappa, kappa, kappa1_closed, kappa3_closed, kappa4_closed, kappa5_closed)
    if k is None:
        vals = [f(alpha) for f in funcs]
    else:
        vals = [laurent_constant(f, float(k)).constant for f in funcs]
    return UniversalConstants(alpha, *vals)


# ---------------------------------------------------------------- helpers


def _coeffs(f) -> tuple[float, float, float]:
    if isinstance(f, WeightProfile):
        return f.F(0), f.F(1), f.F(2)
    f = list(f) + [0.0, 0.0, 0.0]
    return float(f[0]), float(f[1]), float(f[2])


def _components(geom: ModelGeometry, component) -> list[BoundaryComponent]:
    comps = geom.boundary_data()
    if component is None:
        return comps
    if isinstance(component, BoundaryComponent):
        return [component]
    if isinstance(component, int):
        return [comps[component]]
    named = [c for c in comps if c.name == component]
    if not named:
        raise ValidationError(f"{geom.kind.value} has no boundary component {component!r}")
    return named


def _check_ell(ell):
    if ell not in (0, 1, 2):
        raise ValidationError(f"boundary order must be 0, 1 or 2, got {ell}")


def _check_alpha(alpha):
    if not complex(alpha).real < 3:
        raise ValidationError(f"Re(alpha) must be < 3, got {alpha}")


def _tidy(z):
    if isinstance(z, complex):
        return real_if_close(z, 0.0)
    return z


# ---------------------------------------------------------------- smooth case


def interior_local(n: int, geom: ModelGeometry, E: float = 0.0) -> float:
    """Local interior invariant a_n(x) (constant on every model geometry)."""
    pref = (4 * math.pi) ** (-geom.m / 2)
    if n == 0:
        return pref
    if n == 1:
        return pref * (6 * E + geom.scalar_curvature) / 6
    raise ValidationError("interior coefficients are implemented for n = 0, 1 only")


def interior_coefficient(n: int, geom: ModelGeometry, E: float, weight: WeightProfile,
                         eps: float | None = None) -> RegularizedValue:
    """t^(n - m/2) coefficient I_Reg{F a_n}; dropped-pole value at alpha in {1, 2}."""
    return i_reg_weight(weight, geom, factor=interior_local(n, geom, E), eps=eps)


def boundary_coefficient_smooth(ell: int, geom: ModelGeometry, E: float, f, component=None) -> float:
    """Smooth-weight boundary invariants a^bd_ell for ell <= 2."""
    _check_ell(ell)
    F0, F1, F2 = _coeffs(f)
    m = geom.m
    total = 0.0
    for c in _components(geom, component):
        L, LL = c.L_aa, c.L_ab_L_ab
        if ell == 0:
            loc = -0.25 * (4 * math.pi) ** (-(m - 1) / 2) * F0
        elif ell == 1:
            loc = (4 * math.pi) ** (-m / 2) / 6 * (2 * F0 * L - 3 * F1)
        else:
            inner = F0 * (96 * E + 16 * c.R_ijji - 8 * c.R_amma + 7 * L * L - 10 * LL) - 30 * F1 * L + 48 * F2
            loc = -(4 * math.pi) ** (-(m - 1) / 2) / 384 * inner
        total += c.area * loc
    return total


# ---------------------------------------------------------------- singular case


def _singular_local(ell, alpha, c: BoundaryComponent, E, F0, F1, F2):
    L, LL = c.L_aa, c.L_ab_L_ab
    if ell == 0:
        return -kappa(alpha) * F0
    if ell == 1:
        return kappa(alpha - 1) * (-F1 + (alpha - 4) / (2 * (alpha - 3)) * F0 * L)
    k2 = kappa(alpha - 2)
    return k2 * (
        -F2
        + (alpha - 5) / (2 * (alpha - 4)) * F1 * L
        + F0 * c.R_amma / 6
        - (alpha - 7) / (8 * (alpha - 6)) * F0 * L * L
        + (alpha - 5) / (4 * (alpha - 6)) * F0 * LL
        - F0 * c.R_ijji / (3 * (1 - alpha))
        - 2 * F0 * E / (1 - alpha)
    )


def boundary_coefficient_singular(ell: int, alpha, geom: ModelGeometry, E: float, f, component=None):
    """Boundary invariants a^bd_{ell, alpha} for alpha not in {1, 2}."""
    _check_ell(ell)
    _check_alpha(alpha)
    if exceptional_index(alpha) is not None:
        raise ExceptionalAlphaError(f"alpha={alpha} is exceptional; use boundary_coefficient_exceptional")
    F0, F1, F2 = _coeffs(f)
    pref = (4 * math.pi) ** (-geom.m / 2)
    total = 0.0
    for c in _components(geom, component):
        total += c.area * pref * _singular_local(ell, alpha, c, E, F0, F1, F2)
    return _tidy(total)


def _exceptional_local(ell, k, c: BoundaryComponent, E, F0, F1, F2):
    L, LL, C = c.L_aa, c.L_ab_L_ab, EULER_C
    if k == 1:
        if ell == 0:
            return C / 2 * F0
        if ell == 1:
            return SQRT_PI / 2 * (-F1 + 0.75 * F0 * L)
        # the curvature/E terms carry F_0 (the factor is implicit in the printed formula)
        return (
            -0.5 * F2
            + F1 * L / 3
            + F0 * (c.R_amma / 12 - 3 / 40 * L * L + LL / 10 + C / 12 * c.R_ijji + C / 2 * E)
        )
    if ell == 0:
        return SQRT_PI * F0
    if ell == 1:
        return C / 2 * F1 - (C / 2 + 0.5) * F0 * L
    return SQRT_PI * (
        -0.5 * F2 + 3 / 8 * F1 * L + F0 * (c.R_amma / 12 - 5 / 64 * L * L + 3 / 32 * LL + c.R_ijji / 6) + F0 * E
    )


def boundary_coefficient_exceptional(ell: int, alpha, geom: ModelGeometry, E: float, f, component=None) -> float:
    """Dropped-pole boundary invariants at alpha = 1 or 2."""
    _check_ell(ell)
    k = exceptional_index(alpha)
    if k is None:
        raise ValidationError(f"exceptional formulas exist only for alpha in {{1, 2}}, got {alpha}")
    F0, F1, F2 = _coeffs(f)
    pref = (4 * math.pi) ** (-geom.m / 2)
    return sum(c.area * pref * _exceptional_local(ell, k, c, E, F0, F1, F2) for c in _components(geom, component))


def boundary_coefficient(ell: int, alpha, geom: ModelGeometry, E: float, f, component=None):
    """Dispatch to the singular or exceptional closed forms."""
    if exceptional_index(alpha) is not None:
        return boundary_coefficient_exceptional(ell, alpha, geom, E, f, component)
    return boundary_coefficient_singular(ell, alpha, geom, E, f, component)


def dropped_pole_boundary(ell: int, alpha0: int, geom: ModelGeometry, E: float, f, component=None):
    """Laurent constant of the singular formula at alpha0, computed numerically."""
    return laurent_constant(lambda a: boundary_coefficient_singular(ell, a, geom, E, f, component), float(alpha0))


def log_coefficient(k: int, alpha, geom: ModelGeometry, weight, E: float = 0.0) -> float:
    """Coefficient of t^((k - m)/2) ln t at alpha in {1, 2}."""
    a = exceptional_index(alpha)
    if a is None:
        raise ValidationError(f"log terms only occur at alpha in {{1, 2}}, got {alpha}")
    if k < 0:
        raise ValidationError("k must be >= 0")
    if k % 2 == 1:
        return 0.0
    an = interior_local(k // 2, geom, E)
    F0, F1, _ = _coeffs(weight)
    total = 0.0
    for c in geom.boundary_data():
        h = F0 * an if a == 1 else (F1 - F0 * c.L_aa) * an
        total += -0.5 * c.area * h
    return total


# ---------------------------------------------------------------- expansions


@dataclass(frozen=True)
class Term:
    power: complex | float
    log: bool
    coefficient: complex | float
    sources: tuple[str, ...] = ()

    def value(self, t: float):
        p = self.power
        tp = np.exp(p * math.log(t)) if isinstance(p, complex) else t**p
        return self.coefficient * tp * (math.log(t) if self.log else 1.0)


def _power_key(p):
    z = complex(p)
    return (round(z.real, 12), round(z.imag, 12))


@dataclass(frozen=True)
class AsymptoticExpansion:
    """Finite sum of c * t^p (ln t)^log, sorted by increasing Re(p).

    At equal powers the log term comes first (it dominates as t -> 0).
    ``valid_below`` is the smallest power whose coefficient is not fully
    represented (first omitted order); None when no such bound is known.
    """

    terms: tuple[Term, ...]
    valid_below: float | None = None
    meta: dict = field(default_factory=dict, compare=False)

    @staticmethod
    def build(terms: Iterable[Term], valid_below=None, meta=None) -> "AsymptoticExpansion":
        merged: dict = {}
        for t in terms:
            key = (_power_key(t.power), t.log)
            if key in merged:
                old = merged[key]
                merged[key] = Term(old.power, old.log, _tidy(old.coefficient + t.coefficient),
                                   old.sources + t.sources)
            else:
                merged[key] = t
        ordered = sorted(merged.values(), key=lambda t: (complex(t.power).real, complex(t.power).imag, not t.log))
        return AsymptoticExpansion(tuple(ordered), valid_below, dict(meta or {}))

    def __call__(self, t):
        return self.evaluate(t)

    def evaluate(self, t, upto: float | None = None):
        if np.ndim(t):
            return np.array([self.evaluate(float(x), upto) for x in np.ravel(t)])
        out = 0.0
        for term in self.terms:
            if upto is not None and complex(term.power).real >= upto:
                continue
            out += term.value(t)
        return _tidy(out)

    def coefficient(self, power, log: bool = False):
        key = _power_key(power)
        for t in self.terms:
            if _power_key(t.power) == key and t.log == log:
                return t.coefficient
        return 0.0

    def ladder(self) -> list[tuple[complex | float, bool]]:
        return [(t.power, t.log) for t in self.terms]

    def truncated(self, n: int) -> "AsymptoticExpansion":
        return AsymptoticExpansion(self.terms[:n], self.valid_below, self.meta)

    def to_json(self) -> dict:
        def num(z):
            if isinstance(z, complex):
                return [z.real, z.imag]
            return float(z)

        return {
            "terms": [
                {"power": num(t.power), "log": t.log, "coeff": num(t.coefficient), "sources": list(t.sources)}
                for t in self.terms
            ],
            "valid_below": self.valid_below,
        }


def _value(rv):
    return rv.value if isinstance(rv, RegularizedValue) else rv


def full_expansion(
    geom: ModelGeometry,
    weight: WeightProfile,
    E: float = 0.0,
    interior_orders: Sequence[int] = (0, 1),
    boundary_orders: Sequence[int] = (0, 1, 2),
    eps: float | None = None,
) -> AsymptoticExpansion:
    """Predicted small-t expansion of Tr(F exp(-t D)) with D = Laplacian - E."""
    alpha = weight.alpha
    _check_alpha(alpha)
    if any(n not in (0, 1) for n in interior_orders) or any(l not in (0, 1, 2) for l in boundary_orders):
        raise ValidationError("implemented orders: interior n <= 1, boundary ell <= 2")
    m = geom.m
    k = exceptional_index(alpha)
    terms: list[Term] = []
    for n in interior_orders:
        terms.append(Term(n - m / 2, False, _value(interior_coefficient(n, geom, E, weight, eps)), (f"interior{n}",)))
    if weight.is_constant:
        bd_alpha = 0.0
        coeff = lambda l: boundary_coefficient_smooth(l, geom, E, weight)
    else:
        bd_alpha = alpha
        coeff = lambda l: boundary_coefficient(l, alpha, geom, E, weight)
    for l in boundary_orders:
        p = (l - bd_alpha - (m - 1)) / 2
        terms.append(Term(_tidy(p) if isinstance(p, complex) else float(p), False, coeff(l), (f"boundary{l}",)))
    if k is not None and not weight.is_constant:
        for n in interior_orders:
            terms.append(Term((2 * n - m) / 2, True, log_coefficient(2 * n, alpha, geom, weight, E), (f"log{2 * n}",)))
    next_int = max(interior_orders, default=-1) + 1 - m / 2
    next_bd = (max(boundary_orders, default=-1) + 1 - complex(bd_alpha).real - (m - 1)) / 2
    return AsymptoticExpansion.build(
        terms,
        valid_below=min(next_int, next_bd),
        meta={"geometry": geom.describe(), "weight": weight.describe(), "E": E},
    )


def substitute_scaled_time(expansion: AsymptoticExpansion, c: float) -> AsymptoticExpansion:
    """Re-expand P(t / c^2) in powers of t: c^(-2p) factors plus the ln(c) shift of log terms."""
    lc = math.log(c)
    terms = []
    for t in expansion.terms:
        s = c ** (-2 * t.power) if not isinstance(t.power, complex) else np.exp(-2 * t.power * lc)
        terms.append(Term(t.power, t.log, _tidy(s * t.coefficient), t.sources))
        if t.log:
            terms.append(Term(t.power, False, _tidy(-2 * lc * s * t.coefficient), t.sources + ("lnc",)))
    vb = expansion.valid_below
    return AsymptoticExpansion.build(terms, vb, expansion.meta)


def circle_expansion(rho: float) -> AsymptoticExpansion:
    """Heat trace of the circle of radius rho: exact up to exponentially small terms."""
    return AsymptoticExpansion.build([Term(-0.5, False, 2 * math.pi * rho / math.sqrt(4 * math.pi), ("circle",))])


def cauchy_product(a: AsymptoticExpansion, b: AsymptoticExpansion) -> AsymptoticExpansion:
    terms = []
    for x in a.terms:
        for y in b.terms:
            if x.log and y.log:
                raise ValidationError("product of two log terms is not representable")
            terms.append(Term(x.power + y.power, x.log or y.log, x.coefficient * y.coefficient, x.sources + y.sources))
    vb = None
    if a.valid_below is not None and b.valid_below is not None and a.terms and b.terms:
        lead_a = min(complex(t.power).real for t in a.terms)
        lead_b = min(complex(t.power).real for t in b.terms)
        vb = min(a.valid_below + lead_b, b.valid_below + lead_a)
    elif b.valid_below is not None and a.terms:
        vb = b.valid_below + min(complex(t.power).real for t in a.terms)
    return AsymptoticExpansion.build(terms, vb)


# ---------------------------------------------------------------- Bochner data


@dataclass(frozen=True)
class BochnerData:
    omega: tuple[float, ...]
    E: float


def bochner_data(metric_diag, coords, A1, A0, point) -> BochnerData:
    """Connection 1-form and endomorphism of a scalar Laplace-type operator.

    ``metric_diag`` lists the diagonal entries g_{mu mu} as sympy expressions in
    ``coords``; the operator is -(g^{mu nu} d_mu d_nu + A1^nu d_nu + A0).
    """
    import sympy

    x = list(coords)
    m = len(x)
    g = sympy.diag(*metric_diag)
    ginv = g.inv()
    A1 = [sympy.sympify(a) for a in A1]
    A0 = sympy.sympify(A0)

    def first_kind(s, e, mu):  # Gamma_{s e mu} = g_{mu l} Gamma_{s e}^l
        return sympy.Rational(1, 2) * (sympy.diff(g[e, mu], x[s]) + sympy.diff(g[s, mu], x[e]) - sympy.diff(g[s, e], x[mu]))

    def second_kind(mu, nu, s):  # Gamma_{mu nu}^s
        return sum(ginv[s, l] * first_kind(mu, nu, l) for l in range(m))

    omega = [
        sympy.Rational(1, 2)
        * (sum(g[mu, nu] * A1[nu] for nu in range(m)) + sum(ginv[s, e] * first_kind(s, e, mu) for s in range(m) for e in range(m)))
        for mu in range(m)
    ]
    E = A0 - sum(
        ginv[mu, nu]
        * (sympy.diff(omega[mu], x[nu]) + omega[mu] * omega[nu] - sum(omega[s] * second_kind(mu, nu, s) for s in range(m)))
        for mu in range(m)
        for nu in range(m)
    )
    subs = dict(zip(x, point))
    om = tuple(float(sympy.simplify(o).subs(subs)) for o in omega)
    return BochnerData(om, float(sympy.simplify(E).subs(subs)))


# ---------------------------------------------------------------- reference kernels


def reference_kernels(r, t, L_aa):
    """(half-space diagonal, curvature-corrected half-space diagonal) for m = 2."""
    r = np.asarray(r, dtype=float)
    if np.any(r < 0) or t <= 0:
        raise ValidationError("need r >= 0 and t > 0")
    base = 1.0 - np.exp(-r * r / t)
    tail = 0.5 * SQRT_PI * sp.erfc(r / math.sqrt(t))
    lang = base - L_aa * r * r / math.sqrt(t) * tail
    pref = 1.0 / (4 * math.pi * t)
    return pref * base, pref * lang
