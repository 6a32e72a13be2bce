"""Singular boundary weights F = (sum_i F_i r^{i-alpha}) chi(r) on a collar."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .special import cpow


def _bump(x):
    """B(x) = exp(-1/x) for x > 0, else 0 (vectorized)."""
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    pos = x > 0
    out[pos] = np.exp(-1.0 / x[pos])
    return out


def smooth_step(x):
    """C-infinity step: 0 for x <= 0, 1 for x >= 1."""
    b0 = _bump(x)
    b1 = _bump(1.0 - np.asarray(x, dtype=float))
    return b0 / (b0 + b1)


@dataclass(frozen=True)
class CutoffSpec:
    """chi = 1 on [0, eps0], chi = 0 on [eps, inf)."""

    eps0: float
    eps: float

    def __post_init__(self):
        if not (math.isfinite(self.eps0) and math.isfinite(self.eps)):
            raise ValidationError("cutoff radii must be finite")
        if not 0.0 < self.eps0 < self.eps:
            raise ValidationError(f"cutoff needs 0 < eps0 < eps, got eps0={self.eps0}, eps={self.eps}")

    def chi(self, r):
        r = np.asarray(r, dtype=float)
        return smooth_step((self.eps - r) / (self.eps - self.eps0))

    def scaled(self, c: float) -> "CutoffSpec":
        return CutoffSpec(self.eps0 * c, self.eps * c)


def _as_alpha(alpha):
    if isinstance(alpha, complex):
        if alpha.imag == 0.0:
            return float(alpha.real)
        return alpha
    return float(alpha)


@dataclass(frozen=True)
class WeightProfile:
    """Weight with modified Taylor coefficients ``f_coeffs`` = (F_0, F_1, ...).

    The same coefficients are used on every boundary component.  Without a
    cutoff the only admissible weight is the constant F = F_0 with
    alpha = 0, which then extends over the whole manifold.
    """

    alpha: complex | float = 0.0
    f_coeffs: tuple[float, ...] = (1.0,)
    cutoff: CutoffSpec | None = None

    def __post_init__(self):
        a = _as_alpha(self.alpha)
        object.__setattr__(self, "alpha", a)
        coeffs = tuple(float(c) for c in self.f_coeffs)
        if not all(math.isfinite(c) for c in coeffs):
            raise ValidationError("weight coefficients must be finite")
        object.__setattr__(self, "f_coeffs", coeffs)
        if not (complex(a).real < 3.0):
            raise ValidationError(f"Re(alpha) must be < 3, got {a}")
        if not math.isfinite(complex(a).real) or not math.isfinite(complex(a).imag):
            raise ValidationError("alpha must be finite")
        if self.cutoff is None and (a != 0.0 or any(c != 0.0 for c in coeffs[1:])):
            raise ValidationError("a weight without cutoff must be constant (alpha = 0, only F_0)")

    @property
    def is_real(self) -> bool:
        return not isinstance(self.alpha, complex)

    @property
    def is_constant(self) -> bool:
        return self.cutoff is None

    def F(self, i: int) -> float:
        """Modified Taylor coefficient F_i (0 beyond the stored list)."""
        if i < 0:
            raise ValidationError("Taylor index must be >= 0")
        return self.f_coeffs[i] if i < len(self.f_coeffs) else 0.0

    def chi(self, r):
        if self.cutoff is None:
            return np.ones_like(np.asarray(r, dtype=float))
        return self.cutoff.chi(r)

    def smooth_part(self, r):
        """r^alpha F(r) = (sum_i F_i r^i) chi(r); smooth up to r = 0."""
        r = np.asarray(r, dtype=float)
        poly = np.polynomial.polynomial.polyval(r, self.f_coeffs)
        return poly * self.chi(r)

    def evaluate(self, r):
        r_arr = np.asarray(r, dtype=float)
        if np.any(r_arr <= 0):
            raise ValidationError("weight is singular at the boundary; need r > 0")
        if self.is_real:
            out = self.smooth_part(r_arr) * r_arr ** (-self.alpha)
        else:
            out = self.smooth_part(r_arr) * np.exp(-self.alpha * np.log(r_arr))
        return out if np.ndim(r) else out[()]

    def scaled(self, c: float) -> "WeightProfile":
        """Same geometric weight on the metric c^2 g: F_{i,c} = c^(alpha-i) F_i."""
        if not (math.isfinite(c) and c > 0):
            raise ValidationError(f"scale factor must be positive, got {c!r}")
        coeffs = []
        for i, f in enumerate(self.f_coeffs):
            s = cpow(c, self.alpha - i)
            if isinstance(s, complex):
                raise ValidationError("scaling of complex-alpha weights is not representable with real F_i")
            coeffs.append(f * s)
        cut = None if self.cutoff is None else self.cutoff.scaled(c)
        return WeightProfile(self.alpha, tuple(coeffs), cut)

    def times(self, value: float) -> "WeightProfile":
        """Product with a constant factor (a weight pulled back from another factor)."""
        return WeightProfile(self.alpha, tuple(value * f for f in self.f_coeffs), self.cutoff)

    def with_alpha(self, alpha) -> "WeightProfile":
        return WeightProfile(alpha, self.f_coeffs, self.cutoff)

    def describe(self) -> dict:
        a = self.alpha
        out = {
            "alpha": [a.real, a.imag] if isinstance(a, complex) else a,
            "f_coeffs": list(self.f_coeffs),
        }
        if self.cutoff is not None:
            out["eps0"] = self.cutoff.eps0
            out["eps"] = self.cutoff.eps
        return out


def evaluate(w: WeightProfile, r):
    return w.evaluate(r)


def modified_taylor(w: WeightProfile, i: int) -> float:
    return w.F(i)


def constant_weight(value: float = 1.0) -> WeightProfile:
    return WeightProfile(0.0, (value,), None)
