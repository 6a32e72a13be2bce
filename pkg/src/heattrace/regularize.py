"""Regularized integrals of weights that blow up like r^-alpha at the boundary.

The two divergent collar orders ``H_0 r^-alpha + (H_1 - H_0 L_aa) r^(1-alpha)``
are subtracted and integrated in closed form.  The result is a meromorphic
function of alpha with simple poles at 1 and 2; at those points the pole is
dropped (the closed forms become ``ln(eps)``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import integrate

from .errors import HeatTraceError, ValidationError
from .geometry import BoundaryComponent, ModelGeometry
from .weight import WeightProfile

QUAD_OPTS = dict(epsabs=1e-15, epsrel=1e-13, limit=400)
EXCEPTIONAL = (1, 2)


class ExtrapolationError(HeatTraceError):
    """Symmetric-limit extrapolation did not settle (pole of order > 1?)."""

    exit_code = 3


@dataclass(frozen=True)
class RegularizedValue:
    value: complex | float
    pole_dropped: bool = False
    residue: complex | float = 0.0

    def __add__(self, other: "RegularizedValue") -> "RegularizedValue":
        return RegularizedValue(
            _tidy(self.value + other.value),
            self.pole_dropped or other.pole_dropped,
            _tidy(self.residue + other.residue),
        )

    def scaled(self, c) -> "RegularizedValue":
        return RegularizedValue(_tidy(c * self.value), self.pole_dropped, _tidy(c * self.residue))


ZERO = RegularizedValue(0.0)


def _tidy(z):
    if isinstance(z, complex) and z.imag == 0.0:
        return z.real
    return z


def _alpha_parts(alpha):
    a = complex(alpha)
    return a.real, a.imag


def exceptional_index(alpha) -> int | None:
    """1 or 2 when alpha equals that value exactly, else None."""
    a = complex(alpha)
    if a.imag == 0.0 and a.real in EXCEPTIONAL:
        return int(a.real)
    return None


def _quad(f, a, b, points=None, **kw):
    """Quadrature of a possibly complex integrand (real and imaginary parts separately)."""
    if b <= a:
        return 0.0
    opts = {**QUAD_OPTS, **kw}
    if points is not None:
        points = [p for p in points if a < p < b] or None
    probe = f(0.5 * (a + b))
    if np.iscomplexobj(probe):
        re = integrate.quad(lambda r: float(np.real(f(r))), a, b, points=points, **opts)[0]
        im = integrate.quad(lambda r: float(np.imag(f(r))), a, b, points=points, **opts)[0]
        return complex(re, im)
    return integrate.quad(lambda r: float(f(r)), a, b, points=points, **opts)[0]


def _quad_power_weight(g, b, alpha):
    """int_0^b r^(2-alpha) g(r) dr for smooth g (algebraic-weight QAWS rule)."""
    if b <= 0:
        return 0.0
    a_re, a_im = _alpha_parts(alpha)
    wvar = (2.0 - a_re, 0.0)
    opts = dict(weight="alg", wvar=wvar, epsabs=QUAD_OPTS["epsabs"], epsrel=QUAD_OPTS["epsrel"], limit=QUAD_OPTS["limit"])
    if a_im == 0.0:
        return integrate.quad(lambda r: float(g(r)), 0.0, b, **opts)[0]
    # r^(-i b) = cos(b ln r) - i sin(b ln r); bounded, so the same weight applies
    def phase(r):
        return math.log(r) * a_im if r > 0 else 0.0

    re = integrate.quad(lambda r: float(g(r)) * math.cos(phase(r)), 0.0, b, **opts)[0]
    im = integrate.quad(lambda r: -float(g(r)) * math.sin(phase(r)), 0.0, b, **opts)[0]
    return complex(re, im)


def _rpow(r, p):
    if isinstance(p, complex):
        return np.exp(p * np.log(r))
    return r**p


def boundary_closed_forms(H0, H1, L_aa, alpha, eps):
    """Closed-form contributions and residue for the two subtracted orders (per unit area)."""
    k = exceptional_index(alpha)
    c1 = H1 - H0 * L_aa
    log_eps = math.log(eps)
    if k == 1:
        t0, res = H0 * log_eps, -H0
    else:
        t0, res = H0 * _rpow(eps, 1 - alpha) / (1 - alpha), 0.0
    if k == 2:
        t1, res = c1 * log_eps, -c1
    else:
        t1 = c1 * _rpow(eps, 2 - alpha) / (2 - alpha)
    dropped = (k == 1 and H0 != 0) or (k == 2 and c1 != 0)
    return t0 + t1, dropped, res


def i_reg(
    H0: float,
    H1: float,
    component: BoundaryComponent,
    alpha,
    density: Callable[[float], float],
    eps: float,
    *,
    upper: float | None = None,
    outside: complex | float = 0.0,
    remainder: Callable[[float], float] | None = None,
    remainder_upto: float = 0.0,
    breakpoints: tuple[float, ...] = (),
) -> RegularizedValue:
    """Regularized integral of H over one collar plus a fixed outside part.

    ``density(r)`` is H at collar distance r (the jacobian and area are taken
    from ``component``).  ``upper`` is where the collar integration stops
    (default: the collar width); ``outside`` is the already-integrated
    contribution of the rest of the manifold.  ``remainder(r)`` may supply
    ``(H J - subtracted) / r^(2-alpha)`` in closed form on
    ``[0, remainder_upto]``, avoiding cancellation near r = 0.
    """
    a_re, _ = _alpha_parts(alpha)
    if not a_re < 3:
        raise ValidationError(f"Re(alpha) must be < 3, got {alpha}")
    width = component.collar_width
    upper = width if upper is None else upper
    if not 0 < eps <= width * (1 + 1e-12):
        raise ValidationError(f"eps={eps} must lie in (0, collar width {width}]")
    if upper < eps:
        raise ValidationError("upper integration limit is below eps")
    L = component.L_aa
    J = component.jacobian
    c1 = H1 - H0 * L

    def hj(r):
        return density(r) * float(J(r))

    def subtracted(r):
        return hj(r) - H0 * _rpow(r, -alpha) - c1 * _rpow(r, 1 - alpha)

    split = min(remainder_upto, eps) if remainder is not None else 0.0
    pts = tuple(breakpoints)
    near = _quad_power_weight(remainder, split, alpha) if split > 0 else 0.0
    mid = _quad(subtracted, split, eps, points=pts)
    far = _quad(hj, eps, upper, points=pts)
    closed, dropped, res = boundary_closed_forms(H0, H1, L, alpha, eps)
    value = component.area * (near + mid + far + closed) + outside
    return RegularizedValue(_tidy(complex(value)) if isinstance(value, complex) else float(value),
                            dropped, _tidy(component.area * res))


def _weight_remainder(weight: WeightProfile, comp: BoundaryComponent, factor):
    F = [weight.F(i) for i in range(len(weight.f_coeffs))]
    L = comp.L_aa
    D, J = comp.jacobian_defect, comp.jacobian

    def g(r):
        d = float(D(r))
        out = F[0] * d if F else 0.0
        if len(F) > 1:
            out += F[1] * (r * d - L)
        if len(F) > 2:
            jr = float(J(r))
            out += sum(F[i] * r ** (i - 2) * jr for i in range(2, len(F)))
        return factor * out

    return g


def i_reg_weight(
    weight: WeightProfile,
    geom: ModelGeometry,
    factor: float = 1.0,
    eps: float | None = None,
) -> RegularizedValue:
    """I_Reg{factor * F} over the whole manifold for a collar-supported weight.

    ``eps`` is the splitting radius of the regularization (defaults to the
    cutoff plateau radius); the value does not depend on it.
    """
    alpha = weight.alpha
    if weight.is_constant:
        return RegularizedValue(factor * weight.F(0) * geom.volume)
    cut = weight.cutoff
    total = ZERO
    for comp in geom.boundary_data():
        if cut.eps > comp.collar_width * (1 + 1e-12):
            raise ValidationError(
                f"cutoff support eps={cut.eps} exceeds the collar width {comp.collar_width} of {comp.name}"
            )
        e = cut.eps0 if eps is None else eps

        def density(r, _w=weight):
            return factor * complex(_w.evaluate(r)) if not _w.is_real else factor * float(_w.evaluate(r))

        total = total + i_reg(
            factor * weight.F(0),
            factor * weight.F(1),
            comp,
            alpha,
            density,
            e,
            upper=max(cut.eps, e),
            remainder=_weight_remainder(weight, comp, factor),
            remainder_upto=cut.eps0,
            breakpoints=(cut.eps0,),
        )
    return total


@dataclass(frozen=True)
class LaurentResult:
    constant: complex | float
    residue: complex | float
    spread: float

    def __iter__(self):
        yield self.constant
        yield self.residue


def _neville_zero(xs, ys):
    """Value at x = 0 of the interpolating polynomial through (xs, ys)."""
    p = list(ys)
    n = len(xs)
    for k in range(1, n):
        for i in range(n - k):
            p[i] = (xs[i + k] * p[i] - xs[i] * p[i + 1]) / (xs[i + k] - xs[i])
    return p[0]


def laurent_constant(f: Callable, alpha0, hs=(1e-2, 1e-3, 1e-4), tol: float = 1e-6) -> LaurentResult:
    """Constant term and residue of f at a simple pole (or regular point) alpha0.

    Symmetric averages remove the odd part of the Laurent series, so they
    are even in h and Richardson extrapolation in h^2 converges quickly.
    """
    # snap h so that alpha0 +- h are exact doubles: the pole amplifies any asymmetry
    hs = [(alpha0 + h) - alpha0 for h in hs]
    xs = [h * h for h in hs]
    avg, res = [], []
    for h in hs:
        fp, fm = f(alpha0 + h), f(alpha0 - h)
        avg.append(0.5 * (fp + fm))
        res.append(0.5 * h * (fp - fm))
    const = _neville_zero(xs, avg)
    two_point = _neville_zero(xs[1:], avg[1:])
    spread = abs(const - two_point)
    if not spread <= tol * (1 + abs(const)) or not np.isfinite(spread):
        raise ExtrapolationError(
            f"symmetric-limit extrapolation at alpha={alpha0} did not converge (spread {spread:.3g}); "
            "the pole may be of order > 1"
        )
    return LaurentResult(_tidy(complex(const)), _tidy(complex(_neville_zero(xs, res))), float(spread))
