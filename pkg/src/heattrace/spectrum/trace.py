"""Weighted heat traces sum_i e^{-t lambda_i} int F |phi_i|^2 and diagonal heat kernels."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ..errors import ToleranceFailure, ValidationError
from ..geometry import ModelGeometry
from ..weight import WeightProfile
from .modes import ModeTable, _check_weights, spectrum_for

LAMBDA_FLOOR = 1e4
LAMBDA_CAP = 4e6
TAIL_EXPONENT = 40.0
DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class TraceSamples:
    t: np.ndarray
    values: np.ndarray
    truncation_bound: np.ndarray
    lambda_max: float
    n_modes: int
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def samples(self) -> list[tuple[float, float]]:
        return list(zip(self.t.tolist(), self.values.tolist()))

    def __len__(self):
        return int(self.t.size)


def weyl_constant(geom: ModelGeometry) -> float:
    """C with N(lambda) ~ C lambda^(m/2)."""
    m = geom.m
    return geom.volume / ((4 * math.pi) ** (m / 2) * math.gamma(m / 2 + 1))


def tail_bound(geom: ModelGeometry, t, lambda_max: float, scale: float = 1.0):
    """e^{-t Lambda} C_Weyl Lambda^(m/2) times a bound on |int F phi_i^2|."""
    t = np.asarray(t, dtype=float)
    return np.exp(-t * lambda_max) * weyl_constant(geom) * lambda_max ** (geom.m / 2) * scale


def _t_grid(t_grid) -> np.ndarray:
    t = np.atleast_1d(np.asarray(t_grid, dtype=float))
    if t.size == 0 or t.ndim != 1:
        raise ValidationError("t_grid must be a nonempty 1-d sequence")
    if not np.all(np.isfinite(t)) or np.any(t <= 0):
        raise ValidationError("t_grid values must be positive and finite")
    return t


def default_lambda_max(t_min: float) -> float:
    return max(TAIL_EXPONENT / t_min, LAMBDA_FLOOR)


def _lambda_for_tol(geom, t_min, tol, scale):
    """Smallest Lambda (fixed-point iteration) with tail_bound(t_min, Lambda) <= tol / 2."""
    tol = 0.5 * tol  # margin against rounding at the fixed point
    lam = default_lambda_max(t_min)
    for _ in range(50):
        need = math.log(max(weyl_constant(geom) * lam ** (geom.m / 2) * scale / tol, 1.0)) / t_min
        if need <= lam * (1 + 1e-9):
            return lam
        lam = need
    return lam


def _integrals(spec, table: ModeTable, weights: Sequence[WeightProfile]) -> np.ndarray:
    out = np.empty((len(weights), table.size))
    cut = [i for i, w in enumerate(weights) if not w.is_constant]
    for i, w in enumerate(weights):
        if w.is_constant:
            out[i] = w.F(0)
    if cut and table.size:
        out[cut] = spec.collar_integrals(table, [weights[i] for i in cut])
    return out


def _sum_traces(table: ModeTable, W: np.ndarray, t: np.ndarray) -> np.ndarray:
    # fixed order, numpy pairwise summation along the contiguous axis: bit-stable
    E = np.exp(-np.multiply.outer(t, table.lams))
    return np.array([np.sum(E * (table.mults * row), axis=1) for row in W])


def weighted_traces(
    geom: ModelGeometry,
    weights: Sequence[WeightProfile],
    t_grid,
    tol: float = DEFAULT_TOL,
    lambda_max: float | None = None,
) -> list[TraceSamples]:
    """Weighted traces for several weights sharing one spectrum and one set of eigenfunction values."""
    weights = list(weights)
    if not weights:
        raise ValidationError("at least one weight is required")
    _check_weights(geom, weights)
    t = _t_grid(t_grid)
    if not (tol > 0 and math.isfinite(tol)):
        raise ValidationError(f"tol must be positive, got {tol}")
    explicit = lambda_max is not None
    lam = float(lambda_max) if explicit else default_lambda_max(float(t.min()))
    if explicit and not (math.isfinite(lam) and lam > 0):
        raise ValidationError(f"lambda_max must be positive, got {lambda_max}")
    spec = spectrum_for(geom)
    while True:
        table = spec.table(lam)
        W = _integrals(spec, table, weights)
        scale = float(np.max(np.abs(W))) if W.size else 1.0
        bounds = tail_bound(geom, t, lam, max(scale, 1e-300))
        if np.max(bounds) <= tol or explicit:
            break
        need = _lambda_for_tol(geom, float(t.min()), tol, scale)
        if need > LAMBDA_CAP or need <= lam:
            break
        lam = need
    if np.max(bounds) > tol:
        raise ToleranceFailure(
            f"spectral tail {np.max(bounds):.3g} exceeds tol={tol:g} at lambda_max={lam:.4g}; "
            f"raise t_min or lambda_max (supported up to {LAMBDA_CAP:g})"
        )
    values = _sum_traces(table, W, t)
    return [
        TraceSamples(t.copy(), values[i], bounds.copy(), lam, table.size,
                     {"geometry": geom.describe(), "weight": w.describe(), "tol": tol})
        for i, w in enumerate(weights)
    ]


def weighted_trace(geom, weight: WeightProfile, t_grid, tol: float = DEFAULT_TOL,
                   lambda_max: float | None = None) -> TraceSamples:
    """Tr(F e^{-t Delta}) on the exact Dirichlet spectrum, truncated with a recorded tail bound."""
    return weighted_traces(geom, [weight], t_grid, tol, lambda_max)[0]


def diagonal_kernel(geom: ModelGeometry, r, t: float, tol: float = 1e-10,
                    lambda_max: float | None = None):
    """p(x, x; t) at collar distance r (float or array) from the (first) boundary component."""
    width = min(c.collar_width for c in geom.boundary_data())
    r_arr = np.atleast_1d(np.asarray(r, dtype=float))
    if not np.all(np.isfinite(r_arr)) or np.any(r_arr <= 0) or np.any(r_arr >= width):
        raise ValidationError(f"r must lie in (0, {width})")
    if not (math.isfinite(t) and t > 0):
        raise ValidationError(f"t must be positive, got {t}")
    if lambda_max is None:
        lambda_max = _lambda_for_tol(geom, t, tol, 1.0 / geom.volume)
    spec = spectrum_for(geom)
    table = spec.table(lambda_max)
    terms = spec.kernel_terms(table, r_arr)
    vals = np.sum(terms * np.exp(-t * table.lams), axis=1)
    return float(vals[0]) if np.ndim(r) == 0 else vals
