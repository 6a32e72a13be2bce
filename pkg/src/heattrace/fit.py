"""Extraction of small-t coefficients from sampled heat traces.

The exponent ladder always comes from the prediction; the fit only solves
for the coefficients of value(t) ~ sum_j c_j t^{p_j} (ln t)^{delta_j}.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Sequence

import numpy as np

from .errors import ToleranceFailure, ValidationError
from .predict import AsymptoticExpansion
from .spectrum.trace import TraceSamples

MAX_CONDITION = 1e10
MIN_DECADES = 1.5
MIN_R2 = 0.99
LOG_FIT_EXACT = 1e-9  # rms log residual treated as an exact power law


class IllConditionedFit(ToleranceFailure):
    """Design matrix condition number above the admissible bound."""


class NonPowerLaw(ToleranceFailure):
    """Remainder is not well described by a single power of t."""


@dataclass(frozen=True)
class FitTerm:
    power: float
    log: bool
    fitted: float
    stderr: float
    predicted: float | None = None

    @property
    def abs_dev(self) -> float | None:
        return None if self.predicted is None else abs(self.fitted - self.predicted)

    @property
    def rel_dev(self) -> float | None:
        if self.predicted is None:
            return None
        scale = abs(self.predicted)
        return self.abs_dev / scale if scale > 0 else (0.0 if self.abs_dev == 0 else math.inf)


@dataclass(frozen=True)
class FitReport:
    terms: tuple[FitTerm, ...]
    residual_order: float
    next_power: float | None
    condition: float
    omitted_ratio: float | None
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def valid(self) -> bool:
        """Validity gate: the unfitted remainder decays at least like the next ladder power (- 0.2)."""
        if self.next_power is None:
            return True
        return bool(self.residual_order >= self.next_power - 0.2)

    def term(self, power, log: bool = False) -> FitTerm:
        for t in self.terms:
            if abs(t.power - float(power)) < 1e-9 and t.log == log:
                return t
        raise KeyError((power, log))

    def to_json(self) -> dict:
        out = []
        for t in self.terms:
            d = asdict(t)
            d["abs_dev"], d["rel_dev"] = t.abs_dev, t.rel_dev
            out.append(d)
        return {
            "terms": out,
            "residual_order": self.residual_order,
            "next_power": self.next_power,
            "condition": self.condition,
            "omitted_ratio": self.omitted_ratio,
            "valid": self.valid,
        }


def _real_power(p) -> float:
    z = complex(p)
    if z.imag != 0:
        raise ValidationError("fitting needs real exponents")
    return z.real


def _design(t: np.ndarray, ladder) -> np.ndarray:
    lt = np.log(t)
    return np.stack([t**p * (lt if lg else 1.0) for p, lg in ladder], axis=1)


def _solve(t, v, ladder, p0):
    """Weighted least squares with column equilibration; returns (coef, cov, cond)."""
    A = _design(t, ladder) * t[:, None] ** (-p0)
    b = v * t ** (-p0)
    scale = np.linalg.norm(A, axis=0)
    if np.any(scale == 0):
        raise ValidationError("degenerate fit column")
    As = A / scale
    cond = float(np.linalg.cond(As))
    coef_s, *_ = np.linalg.lstsq(As, b, rcond=None)
    resid = b - As @ coef_s
    dof = max(len(t) - len(ladder), 1)
    sigma2 = float(resid @ resid) / dof
    cov_s = sigma2 * np.linalg.pinv(As.T @ As)
    coef = coef_s / scale
    cov = cov_s / np.outer(scale, scale)
    return coef, cov, cond


def _as_arrays(samples) -> tuple[np.ndarray, np.ndarray]:
    if isinstance(samples, TraceSamples):
        t, v = samples.t, samples.values
    else:
        pairs = np.asarray(samples, dtype=float)
        t, v = pairs[:, 0], pairs[:, 1]
    t = np.asarray(t, dtype=float)
    v = np.asarray(v)
    if np.iscomplexobj(v):
        raise ValidationError("fitting needs real trace values")
    if t.size < 2 or np.any(t <= 0) or not np.all(np.isfinite(v)):
        raise ValidationError("need at least two finite samples at positive t")
    return t, v.astype(float)


def loglog_slope(t: np.ndarray, r: np.ndarray) -> tuple[float, float, float]:
    """Fit r ~ c t^p by regression of ln|r| on ln t; returns (c, p, R^2)."""
    x = np.log(t)
    y = np.log(np.abs(r))
    A = np.stack([np.ones_like(x), x], axis=1)
    (lnc, p), *_ = np.linalg.lstsq(A, y, rcond=None)
    ss_res = float(np.sum((y - A @ np.array([lnc, p])) ** 2))
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    if ss_res <= LOG_FIT_EXACT**2 * x.size:
        r2 = 1.0  # exact power law; R^2 is meaningless when ln|r| is flat
    else:
        r2 = 1.0 - ss_res / ss_tot if ss_tot > 0 else 1.0
    sign = float(np.sign(np.median(r)))
    return sign * math.exp(lnc), float(p), r2


def fit_coefficients(
    samples,
    ladder: Sequence[tuple[float, bool]],
    n_fit: int,
    predicted: AsymptoticExpansion | None = None,
) -> FitReport:
    """Least-squares coefficients of the first ``n_fit`` ladder terms, weighted by t^-p_0.

    ``residual_order`` is the log-log slope of what remains after subtracting
    the first n_fit coefficients of an (n_fit + 1)-term fit, i.e. the
    empirical order of the first unfitted term.
    """
    t, v = _as_arrays(samples)
    ladder = [(_real_power(p), bool(lg)) for p, lg in ladder]
    if not 1 <= n_fit <= len(ladder):
        raise ValidationError(f"n_fit must be in [1, {len(ladder)}], got {n_fit}")
    if n_fit > t.size:
        raise ValidationError("more fit terms than samples")
    if math.log10(t.max() / t.min()) < MIN_DECADES - 1e-9:
        raise ValidationError(f"samples must span at least {MIN_DECADES} decades of t")
    use = ladder[:n_fit]
    p0 = use[0][0]
    coef, cov, cond = _solve(t, v, use, p0)
    if cond > MAX_CONDITION:
        raise IllConditionedFit(
            f"design matrix condition number {cond:.3g} exceeds {MAX_CONDITION:g}; "
            "shrink the t range toward 0 or reduce n_fit"
        )
    err = np.sqrt(np.maximum(np.diag(cov), 0.0))

    next_power, residual_order, omitted = None, math.inf, None
    if n_fit < len(ladder) and n_fit + 1 <= t.size:
        next_power = ladder[n_fit][0]
        aug, _, _ = _solve(t, v, ladder[: n_fit + 1], p0)
        err = np.maximum(err, np.abs(aug[:n_fit] - coef))
        rem = v - _design(t, use) @ aug[:n_fit]
        if np.all(rem != 0):
            residual_order = loglog_slope(t, rem)[1]
        tm = t.max()
        last = abs(coef[-1] * _design(np.array([tm]), use[-1:])[0, 0])
        nxt = abs(aug[-1] * _design(np.array([tm]), ladder[n_fit : n_fit + 1])[0, 0])
        omitted = nxt / last if last > 0 else math.inf

    terms = []
    for (p, lg), c, e in zip(use, coef, err):
        pred = None
        if predicted is not None:
            pc = predicted.coefficient(p, lg)
            pred = float(complex(pc).real)
        terms.append(FitTerm(p, lg, float(c), float(e), pred))
    return FitReport(tuple(terms), float(residual_order), next_power, cond, omitted,
                     {"n_samples": int(t.size), "t_min": float(t.min()), "t_max": float(t.max())})


@dataclass(frozen=True)
class PeelResult:
    coefficient: float
    power: float
    r_squared: float

    def __iter__(self):
        yield self.coefficient
        yield self.power


def peel_leading(samples, known: AsymptoticExpansion, min_r2: float = MIN_R2) -> PeelResult:
    """Subtract the known leading terms and fit the remainder to c t^p."""
    t, v = _as_arrays(samples)
    rem = v - np.real(np.asarray(known.evaluate(t), dtype=complex))
    if np.any(rem == 0) or not np.all(np.isfinite(rem)):
        raise NonPowerLaw("remainder vanishes or is not finite at some sample")
    if np.any(np.sign(rem) != np.sign(rem[0])):
        raise NonPowerLaw("remainder changes sign; not a single power law")
    c, p, r2 = loglog_slope(t, rem)
    if r2 < min_r2:
        raise NonPowerLaw(f"remainder is not a power law (R^2 = {r2:.4f} < {min_r2})")
    return PeelResult(c, p, r2)


def ladder_from(expansion: AsymptoticExpansion, rel_floor: float = 1e-12) -> list[tuple[float, bool]]:
    """Exponent ladder of the predicted expansion, without terms that vanish identically."""
    coeffs = [abs(complex(t.coefficient)) for t in expansion.terms]
    scale = max(coeffs, default=0.0)
    return [(_real_power(t.power), t.log) for t, c in zip(expansion.terms, coeffs) if c > rel_floor * scale]


__all__ = [
    "FitReport",
    "FitTerm",
    "IllConditionedFit",
    "NonPowerLaw",
    "PeelResult",
    "fit_coefficients",
    "ladder_from",
    "loglog_slope",
    "peel_leading",
]
