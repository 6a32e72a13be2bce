"""Zeros of J_nu and of the annulus cross product J_n(ka)Y_n(kb) - J_n(kb)Y_n(ka).

Zeros are bracketed by a sign scan whose step is below half the minimal zero
spacing, refined by safeguarded Newton, and the final count is checked
against the Debye (or WKB) phase so that no zero is silently dropped.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import optimize, special

from ..errors import RootFindingError, ValidationError

SCAN_STEP = 1.0  # zeros of J_nu (nu >= 0) are more than 3 apart
NEWTON_ITERS = 12


def mcmahon(nu: float, k: int) -> float:
    """McMahon's large-zero expansion of j_{nu,k}."""
    mu = 4.0 * nu * nu
    beta = (k + 0.5 * nu - 0.25) * math.pi
    e = 8.0 * beta
    return beta - (mu - 1) / e - 4 * (mu - 1) * (7 * mu - 31) / (3 * e**3)


def debye_count(nu: float, x: float) -> float:
    """Smooth approximation to the number of zeros of J_nu in (0, x]."""
    if x <= nu:
        return 0.0
    phase = math.sqrt(x * x - nu * nu) - nu * math.acos(nu / x)
    return phase / math.pi + 0.25


def _refine(nu: float, lo: np.ndarray, hi: np.ndarray, flo: np.ndarray, fhi: np.ndarray) -> np.ndarray:
    """Safeguarded Newton inside sign-change brackets (vectorized)."""
    x = lo - flo * (hi - lo) / (fhi - flo)  # secant start
    active = np.ones(x.shape, dtype=bool)
    for _ in range(NEWTON_ITERS):
        xa = x[active]
        f = special.jv(nu, xa)
        d = (nu / xa) * f - special.jv(nu + 1, xa)
        same = np.sign(f) == np.sign(flo[active])
        lo_a = np.where(same, xa, lo[active])
        hi_a = np.where(same, hi[active], xa)
        flo[active] = np.where(same, f, flo[active])
        lo[active], hi[active] = lo_a, hi_a
        x_new = xa - f / d
        bad = ~((x_new >= lo_a) & (x_new <= hi_a)) | ~np.isfinite(x_new)
        x_new = np.where(bad, 0.5 * (lo_a + hi_a), x_new)
        conv = (np.abs(x_new - xa) <= 2e-15 * xa) | (f == 0.0)
        x[active] = np.where(f == 0.0, xa, x_new)
        idx = np.nonzero(active)[0]
        active[idx[conv]] = False
        if not active.any():
            return x
    raise RootFindingError(f"Newton iteration for zeros of J_{nu} did not converge")


def bessel_zeros(nu: float, x_max: float) -> np.ndarray:
    """All positive zeros of J_nu not exceeding x_max, ascending."""
    if not (nu >= 0 and math.isfinite(nu)):
        raise ValidationError(f"Bessel order must be >= 0, got {nu}")
    if x_max <= nu:
        return np.empty(0)
    start = max(nu, 1e-3)  # J_nu > 0 on (0, nu]
    grid = np.arange(start, x_max + SCAN_STEP, SCAN_STEP)
    vals = special.jv(nu, grid)
    if not np.all(np.isfinite(vals)):
        raise RootFindingError(f"non-finite J_{nu} during the zero scan")
    exact = grid[:-1][vals[:-1] == 0.0]
    idx = np.nonzero(vals[:-1] * vals[1:] < 0)[0]
    zeros = _refine(nu, grid[idx], grid[idx + 1], vals[idx], vals[idx + 1]) if idx.size else np.empty(0)
    zeros = np.sort(np.concatenate([zeros, exact]))
    zeros = zeros[zeros <= x_max]
    _certify(nu, zeros, x_max)
    return zeros


def _certify(nu, zeros, x_max):
    if zeros.size > 1 and np.min(np.diff(zeros)) < 2.5:
        raise RootFindingError(f"zeros of J_{nu} closer than the known minimal spacing")
    expected = debye_count(nu, x_max)
    if abs(zeros.size - expected) > 1.5:
        raise RootFindingError(
            f"found {zeros.size} zeros of J_{nu} below {x_max}, phase estimate {expected:.2f}"
        )


def bessel_zero(n: float, k: int) -> float:
    """k-th positive zero j_{n,k} of J_n."""
    if not (n >= 0 and math.isfinite(n)):
        raise ValidationError(f"order must be >= 0, got {n}")
    if int(k) != k or k < 1:
        raise ValidationError(f"zero index must be a positive integer, got {k}")
    k = int(k)
    x_max = max(mcmahon(n, k), n + 2.0 * n ** (1 / 3) + 4.0) + 2.0 * math.pi
    while True:
        z = bessel_zeros(n, x_max)
        if z.size >= k:
            return float(z[k - 1])
        x_max += (k - z.size + 1) * math.pi


def bessel_norm(nu: float, j):
    """J_{nu+1}(j)^2, i.e. J_nu'(j)^2 at a zero j."""
    return special.jv(nu + 1, j) ** 2


# ---- annulus


def cross_product(n: int, a: float, b: float, k):
    k = np.asarray(k, dtype=float)
    return special.jv(n, k * a) * special.yv(n, k * b) - special.jv(n, k * b) * special.yv(n, k * a)


def annulus_profile(n: int, a: float, k: float, s):
    """u(s) = J_n(ks)Y_n(ka) - J_n(ka)Y_n(ks), vanishing at s = a."""
    s = np.asarray(s, dtype=float)
    return special.jv(n, k * s) * special.yv(n, k * a) - special.jv(n, k * a) * special.yv(n, k * s)


def annulus_norm(n: int, a: float, b: float, k: float) -> float:
    """int_a^b u(s)^2 s ds, from the Wronskian: (b^2 u'(b)^2 - 4/pi^2) / (2 k^2)."""
    up = k * (special.jvp(n, k * b) * special.yv(n, k * a) - special.jv(n, k * a) * special.yvp(n, k * b))
    return (b * b * up * up - 4.0 / math.pi**2) / (2.0 * k * k)


def wkb_count(n: int, a: float, b: float, k: float) -> float:
    """Semiclassical number of radial modes of angular order n with wavenumber <= k."""
    if k * b <= n:
        return 0.0

    def phase(s):
        return math.sqrt(max(k * k * s * s - n * n, 0.0)) - n * math.acos(min(n / (k * s), 1.0)) if s > 0 else 0.0

    lo = max(a, n / k)
    return (phase(b) - phase(lo)) / math.pi


def annulus_zeros(n: int, a: float, b: float, k_max: float) -> np.ndarray:
    """Wavenumbers k <= k_max of the Dirichlet annulus modes with angular order n."""
    if not 0 < a < b:
        raise ValidationError("annulus requires 0 < inner < outer")
    k_lo = max(n / b, 1e-6)  # Rayleigh bound: k > n / b
    if k_lo >= k_max:
        return np.empty(0)
    step = math.pi / (4.0 * (b - a))
    grid = np.arange(k_lo, k_max + step, step)
    vals = cross_product(n, a, b, grid)
    if not np.all(np.isfinite(vals)):
        raise RootFindingError(f"cross product overflow for order {n}; annulus ratio too extreme")
    idx = np.nonzero(vals[:-1] * vals[1:] < 0)[0]
    roots = []
    for i in idx:
        roots.append(optimize.brentq(lambda k: float(cross_product(n, a, b, k)), grid[i], grid[i + 1],
                                     xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=200))
    roots = np.array([r for r in roots if r <= k_max])
    expected = wkb_count(n, a, b, k_max)
    if abs(roots.size - expected) > 1.5:
        raise RootFindingError(
            f"annulus order {n}: found {roots.size} modes below k={k_max}, WKB estimate {expected:.2f}"
        )
    return roots
