"""Exact Dirichlet spectra of the model geometries.

Each geometry family exposes a mode table (eigenvalues in a canonical,
thread-independent order), collar densities of its eigenfunctions, the
weighted collar integrals int F |phi_i|^2, and pointwise diagonal terms.
A collar density rho_i(r) is |phi_i|^2 integrated over the boundary
directions at collar distance r, summed over boundary components, so that
int_M F |phi_i|^2 = int_0^eps F(r) rho_i(r) dr for a collar weight F.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy import special

from ..errors import RootFindingError, ValidationError
from ..geometry import Annulus, Ball3, Cylinder, Disk, Hemisphere, Interval, ModelGeometry
from ..weight import WeightProfile
from . import bessel
from .parallel import ordered_map
from .quadrature import (
    GL_ORDER,
    TRANSITION_PANELS,
    CollarRule,
    check_real,
    gauss_legendre,
    panel_nodes,
    power_weights,
    support,
    transition_width,
)

# phase omega * h per regular panel; the 24-point rule stays at ~1e-15 up to ~32
PANEL_PHASE = 24.0


@dataclass(frozen=True)
class SpectralLine:
    """One eigenvalue (or eigenspace of a separated family) with its collar density."""

    lam: float
    multiplicity: int
    radial_profile: Callable[[np.ndarray], np.ndarray] = field(repr=False, compare=False)
    label: tuple = ()


@dataclass
class ModeTable:
    lams: np.ndarray
    mults: np.ndarray
    labels: np.ndarray  # (N, 2) integer family indices
    lambda_max: float
    aux: dict = field(default_factory=dict)

    @property
    def size(self) -> int:
        return int(self.lams.size)


def _empty_table(lambda_max) -> ModeTable:
    return ModeTable(np.empty(0), np.empty(0, dtype=int), np.empty((0, 2), dtype=int), lambda_max)


def _check_lambda(lambda_max):
    if not (math.isfinite(lambda_max) and lambda_max > 0):
        raise ValidationError(f"lambda_max must be positive and finite, got {lambda_max}")


def _check_weights(geom: ModelGeometry, weights):
    for w in weights:
        if not isinstance(w, WeightProfile):
            raise ValidationError("weights must be WeightProfile instances")
        check_real(w)
        if w.cutoff is not None:
            for comp in geom.boundary_data():
                if w.cutoff.eps > comp.collar_width * (1 + 1e-12):
                    raise ValidationError(
                        f"cutoff support eps={w.cutoff.eps} exceeds the collar width {comp.collar_width}"
                    )


def _panel_width(omega_max: float, weights) -> float:
    return min(PANEL_PHASE / max(omega_max, 1e-300), transition_width(weights) / TRANSITION_PANELS)


class Spectrum:
    geom: ModelGeometry

    def table(self, lambda_max: float) -> ModeTable:  # pragma: no cover - abstract
        raise NotImplementedError

    def profile(self, table: ModeTable, i: int) -> Callable:  # pragma: no cover
        raise NotImplementedError

    def collar_integrals(self, table: ModeTable, weights) -> np.ndarray:
        """(len(weights), N) array of int F |phi_i|^2 (cut-off weights only)."""
        raise NotImplementedError  # pragma: no cover

    def kernel_terms(self, table: ModeTable, r: np.ndarray) -> np.ndarray:
        """(len(r), N) pointwise sum over each line's eigenspace of |phi|^2."""
        raise NotImplementedError  # pragma: no cover

    def lines(self, lambda_max: float) -> list[SpectralLine]:
        tab = self.table(lambda_max)
        order = np.argsort(tab.lams, kind="stable")
        return [
            SpectralLine(float(tab.lams[i]), int(tab.mults[i]), self.profile(tab, int(i)), tuple(int(v) for v in tab.labels[i]))
            for i in order
        ]


# ---------------------------------------------------------------- interval


class IntervalSpectrum(Spectrum):
    def __init__(self, geom: Interval):
        self.geom = geom
        self.L = geom.length

    def table(self, lambda_max):
        _check_lambda(lambda_max)
        kmax = int(math.floor(self.L * math.sqrt(lambda_max) / math.pi + 1e-12))
        k = np.arange(1, kmax + 1)
        lams = (k * math.pi / self.L) ** 2
        keep = lams <= lambda_max
        k = k[keep]
        return ModeTable(lams[keep], np.ones(k.size, dtype=int), np.stack([np.zeros_like(k), k], axis=1), lambda_max)

    def _density(self, k, r):
        # both ends contribute; sin^2 is symmetric under r -> L - r
        return (4.0 / self.L) * np.sin(np.multiply.outer(k, r) * (math.pi / self.L)) ** 2

    def profile(self, table, i):
        k = int(table.labels[i, 1])
        return lambda r: self._density(k, np.asarray(r, dtype=float))

    def integrals_for_k(self, k: np.ndarray, weights) -> np.ndarray:
        if k.size == 0:
            return np.zeros((len(weights), 0))
        h = _panel_width(2 * math.pi * k.max() / self.L, weights)
        rule = CollarRule(weights, h)
        return rule.integrate(self._density(k, rule.nodes))

    def collar_integrals(self, table, weights):
        return self.integrals_for_k(table.labels[:, 1], weights)

    def kernel_terms(self, table, r):
        k = table.labels[:, 1]
        return (2.0 / self.L) * np.sin(np.multiply.outer(r, k) * (math.pi / self.L)) ** 2


# ---------------------------------------------------------------- cylinder


class CylinderSpectrum(Spectrum):
    """S^1_rho x [0, L]: circle modes e^{i n theta} (n and -n grouped) times interval modes."""

    def __init__(self, geom: Cylinder):
        self.geom = geom
        self.rho = geom.rho
        self.interval = IntervalSpectrum(Interval(geom.length))

    def table(self, lambda_max):
        _check_lambda(lambda_max)
        base = self.interval.table(lambda_max)
        lams, mults, labels = [], [], []
        for mu, k in zip(base.lams, base.labels[:, 1]):
            nmax = int(math.floor(self.rho * math.sqrt(max(lambda_max - mu, 0.0)) + 1e-12))
            n = np.arange(0, nmax + 1)
            lam = n**2 / self.rho**2 + mu
            n = n[lam <= lambda_max]
            lams.append(n**2 / self.rho**2 + mu)
            mults.append(np.where(n == 0, 1, 2))
            labels.append(np.stack([n, np.full_like(n, k)], axis=1))
        if not lams:
            return _empty_table(lambda_max)
        return ModeTable(np.concatenate(lams), np.concatenate(mults), np.concatenate(labels), lambda_max)

    def profile(self, table, i):
        k = int(table.labels[i, 1])
        return lambda r: self.interval._density(k, np.asarray(r, dtype=float))

    def collar_integrals(self, table, weights):
        ks, inverse = np.unique(table.labels[:, 1], return_inverse=True)
        vals = self.interval.integrals_for_k(ks, weights)
        return vals[:, inverse]

    def kernel_terms(self, table, r):
        k = table.labels[:, 1]
        base = (2.0 / self.interval.L) * np.sin(np.multiply.outer(r, k) * (math.pi / self.interval.L)) ** 2
        return base * table.mults / (2 * math.pi * self.rho)


# ---------------------------------------------------------------- disk and ball


class BesselSpectrum(Spectrum):
    """Disk (J_n, multiplicity 2 - delta_n0) and 3-ball (J_{l+1/2}, multiplicity 2l + 1).

    Radial density of a normalized mode in the collar coordinate r = R - s:
    rho(r) = 2 (R - r) J_nu(j (1 - r/R))^2 / (R^2 J_{nu+1}(j)^2) in both cases.
    """

    def __init__(self, geom):
        self.geom = geom
        self.R = geom.radius
        self.ball = isinstance(geom, Ball3)

    def nu(self, order):
        return order + 0.5 if self.ball else float(order)

    def mult(self, order):
        return 2 * order + 1 if self.ball else (1 if order == 0 else 2)

    def _order_zeros(self, order, K):
        return bessel.bessel_zeros(self.nu(order), K)

    def table(self, lambda_max):
        _check_lambda(lambda_max)
        K = self.R * math.sqrt(lambda_max)
        orders = range(0, int(math.ceil(K)) + 1)  # j_{nu,1} > nu
        zs = ordered_map(lambda n: self._order_zeros(n, K), orders)
        lams, mults, labels, js = [], [], [], []
        for n, z in zip(orders, zs):
            if z.size == 0:
                continue
            js.append(z)
            lams.append((z / self.R) ** 2)
            mults.append(np.full(z.size, self.mult(n)))
            labels.append(np.stack([np.full(z.size, n), np.arange(1, z.size + 1)], axis=1))
        if not lams:
            return _empty_table(lambda_max)
        j = np.concatenate(js)
        tab = ModeTable(np.concatenate(lams), np.concatenate(mults), np.concatenate(labels), lambda_max, {"j": j})
        nu = np.array([self.nu(n) for n in tab.labels[:, 0]])
        tab.aux["norm"] = special.jv(nu + 1, j) ** 2
        return tab

    def profile(self, table, i):
        nu = self.nu(int(table.labels[i, 0]))
        j = float(table.aux["j"][i])
        norm = float(table.aux["norm"][i])
        R = self.R

        def rho(r):
            r = np.asarray(r, dtype=float)
            return 2.0 * (R - r) * special.jv(nu, j * (1 - r / R)) ** 2 / (R * R * norm)

        return rho

    def kernel_terms(self, table, r):
        nu = np.array([self.nu(n) for n in table.labels[:, 0]])
        j, norm = table.aux["j"], table.aux["norm"]
        s = self.R - np.asarray(r, dtype=float)
        vals = special.jv(nu, np.multiply.outer(s / self.R, j)) ** 2 / norm
        if self.ball:
            return vals * table.mults / (2 * math.pi * self.R**2 * s[:, None])
        return vals * table.mults / (math.pi * self.R**2)

    # -- weighted collar integrals, one order at a time on a shared x = k s grid
    def collar_integrals(self, table, weights):
        out = np.zeros((len(weights), table.size))
        orders = table.labels[:, 0]
        if table.size == 0:
            return out
        bounds = np.flatnonzero(np.diff(orders)) + 1
        starts = np.concatenate([[0], bounds])
        stops = np.concatenate([bounds, [table.size]])
        eps_sup = support(weights)
        eps0_min = min(w.cutoff.eps0 for w in weights)
        c_t = transition_width(weights) / (TRANSITION_PANELS * (self.R - eps0_min))
        # J^2 oscillates with angular frequency 2 in x
        h_osc = PANEL_PHASE / 2.0
        singular = [power_weights(2.0 - w.alpha) for w in weights]

        def work(span):
            a, b = span
            nu = self.nu(int(orders[a]))
            return self._order_integrals(nu, table.aux["j"][a:b], table.aux["norm"][a:b], weights,
                                         eps_sup, c_t, h_osc, singular)

        parts = ordered_map(work, list(zip(starts, stops)))
        for (a, b), part in zip(zip(starts, stops), parts):
            out[:, a:b] = part
        return out

    def _order_integrals(self, nu, js, norms, weights, eps_sup, c_t, h_osc, singular):
        R = self.R
        M = js.size
        tau, _ = gauss_legendre(GL_ORDER)
        # shared regular grid in x, refined geometrically toward small x so every cutoff
        # transition (width >= x (eps - eps0)/(R - eps0)) spans several panels
        x0 = js[0] * (1 - eps_sup / R)
        edges = [x0]
        top = js[-1]
        while edges[-1] < top:
            e = edges[-1]
            edges.append(e + min(h_osc, c_t * e))
        edges = np.array(edges)
        X, GW = panel_nodes(edges)
        JX2 = special.jv(nu, X) ** 2
        Xf, GWf, J2f = X.ravel(), GW.ravel(), JX2.ravel()
        n = GL_ORDER

        # singular panel [s_k, j_k]: s_k is the largest edge with j_k - s_k >= w(j_k) / 4
        w_at = np.minimum(h_osc, c_t * js)
        s_idx = np.searchsorted(edges, js - 0.25 * w_at, side="right") - 1
        s_idx = np.maximum(s_idx, 0)
        s = edges[s_idx]
        hs = js - s
        if np.any(hs <= 0) or np.any(hs > 2.0 * h_osc + 1e-9):
            raise RootFindingError("singular panel construction failed")
        # regular panels run from the one containing the support edge up to s_k
        lo_idx = np.maximum(np.searchsorted(edges, js * (1 - eps_sup / R), side="right") - 1, 0)
        lo_idx = np.minimum(lo_idx, s_idx)
        p0, p1 = lo_idx * n, s_idx * n
        lengths = p1 - p0
        owner = np.repeat(np.arange(M), lengths)
        offsets = np.arange(lengths.sum()) - np.repeat(np.cumsum(lengths) - lengths, lengths)
        flat = np.repeat(p0, lengths) + offsets
        xr = Xf[flat]
        rr = R * (1.0 - xr / js[owner])
        base = GWf[flat] * xr * J2f[flat]
        seg_starts = np.cumsum(lengths) - lengths

        xs = js[:, None] - 0.5 * hs[:, None] * (1.0 + tau)
        r_s = (R / js)[:, None] * (js[:, None] - xs)
        Q = (special.jv(nu, xs) / (js[:, None] - xs)) ** 2
        res = np.zeros((len(weights), M))
        for iw, (w, W) in enumerate(zip(weights, singular)):
            a = w.alpha
            reg = np.zeros(M)
            if base.size:
                vals = base * w.evaluate(rr)
                nz = lengths > 0
                reg[nz] = np.add.reduceat(vals, seg_starts[nz])
            g = w.smooth_part(r_s) * xs * Q
            sing = (R / js) ** (-a) * (0.5 * hs) ** (3.0 - a) * np.sum(W * g, axis=1)
            res[iw] = 2.0 * (reg + sing) / (js * js * norms)
        return res


# ---------------------------------------------------------------- annulus


class AnnulusSpectrum(Spectrum):
    def __init__(self, geom: Annulus):
        self.geom = geom
        self.a, self.b = geom.inner, geom.outer

    def table(self, lambda_max):
        _check_lambda(lambda_max)
        K = math.sqrt(lambda_max)
        orders = range(0, int(math.ceil(K * self.b)) + 1)
        ks = ordered_map(lambda n: bessel.annulus_zeros(n, self.a, self.b, K), orders)
        lams, mults, labels, kk = [], [], [], []
        for n, k in zip(orders, ks):
            if k.size == 0:
                continue
            kk.append(k)
            lams.append(k**2)
            mults.append(np.full(k.size, 1 if n == 0 else 2))
            labels.append(np.stack([np.full(k.size, n), np.arange(1, k.size + 1)], axis=1))
        if not lams:
            return _empty_table(lambda_max)
        k = np.concatenate(kk)
        tab = ModeTable(np.concatenate(lams), np.concatenate(mults), np.concatenate(labels), lambda_max, {"k": k})
        tab.aux["norm"] = np.array([bessel.annulus_norm(int(n), self.a, self.b, kv)
                                    for n, kv in zip(tab.labels[:, 0], k)])
        if np.any(tab.aux["norm"] <= 0):
            raise RootFindingError("non-positive annulus mode normalization")
        return tab

    def _u(self, n, k, s):
        return bessel.annulus_profile(n, self.a, np.asarray(k)[..., None], s)

    def _density(self, n, k, norm, r):
        r = np.asarray(r, dtype=float)
        so, si = self.b - r, self.a + r
        k = np.atleast_1d(k)
        norm = np.atleast_1d(norm)
        return (self._u(n, k, so) ** 2 * so + self._u(n, k, si) ** 2 * si) / norm[:, None]

    def profile(self, table, i):
        n, k, norm = int(table.labels[i, 0]), float(table.aux["k"][i]), float(table.aux["norm"][i])
        return lambda r: self._density(n, k, norm, r)[0]

    def collar_integrals(self, table, weights):
        out = np.zeros((len(weights), table.size))
        orders = table.labels[:, 0]

        def work(n):
            sel = np.flatnonzero(orders == n)
            k = table.aux["k"][sel]
            rule = CollarRule(weights, _panel_width(2 * k.max(), weights))
            return sel, rule.integrate(self._density(int(n), k, table.aux["norm"][sel], rule.nodes))

        for sel, vals in ordered_map(work, np.unique(orders)):
            out[:, sel] = vals
        return out

    def kernel_terms(self, table, r):
        """Diagonal at distance r from the outer circle."""
        s = self.b - np.asarray(r, dtype=float)
        out = np.empty((s.size, table.size))
        for i, (n, k, norm, mult) in enumerate(zip(table.labels[:, 0], table.aux["k"], table.aux["norm"], table.mults)):
            out[:, i] = mult * bessel.annulus_profile(int(n), self.a, k, s) ** 2 / (2 * math.pi * norm)
        return out


# ---------------------------------------------------------------- hemisphere


def legendre_dirichlet_sums(lmax: int, x: np.ndarray, odd: bool = True) -> np.ndarray:
    """S[l](x) = sum over m >= 0 with l + m odd (or even) of (2 - delta_m0) Pbar_l^m(x)^2.

    Pbar_l^m is normalized by int_{-1}^{1} Pbar^2 dx = 1 and generated by the
    upward recurrence in degree at fixed order.
    """
    x = np.asarray(x, dtype=float)
    S = np.zeros((lmax + 1, x.size))
    sq = np.sqrt(np.maximum(1.0 - x * x, 0.0))
    pmm = np.full(x.shape, math.sqrt(0.5))
    parity = 1 if odd else 0
    for m in range(0, lmax + 1):
        if m > 0:
            pmm = pmm * math.sqrt((2 * m + 1) / (2 * m)) * sq
        c = 1.0 if m == 0 else 2.0
        if (2 * m) % 2 == parity:
            S[m] += c * pmm * pmm
        if m + 1 > lmax:
            break
        p2, p1 = pmm, math.sqrt(2 * m + 3) * x * pmm
        if (2 * m + 1) % 2 == parity:
            S[m + 1] += c * p1 * p1
        for l in range(m + 2, lmax + 1):
            a = math.sqrt((4 * l * l - 1) / (l * l - m * m))
            b = math.sqrt(((l - 1) ** 2 - m * m) / (4 * (l - 1) ** 2 - 1))
            p2, p1 = p1, a * (x * p1 - b * p2)
            if (l + m) % 2 == parity:
                S[l] += c * p1 * p1
    return S


class HemisphereSpectrum(Spectrum):
    """Dirichlet hemisphere: l(l+1)/a^2, eigenspace spanned by Y_l^m with l + m odd (dimension l)."""

    def __init__(self, geom: Hemisphere):
        self.geom = geom
        self.a = geom.radius

    def table(self, lambda_max):
        _check_lambda(lambda_max)
        lmax = int(math.floor((-1 + math.sqrt(1 + 4 * lambda_max * self.a**2)) / 2 + 1e-12))
        l = np.arange(1, lmax + 1)
        lams = l * (l + 1) / self.a**2
        keep = lams <= lambda_max
        l = l[keep]
        return ModeTable(lams[keep], l.copy(), np.stack([l, np.zeros_like(l)], axis=1), lambda_max)

    def _eigenspace_density(self, lmax, r):
        """(lmax + 1, len(r)) collar density summed over each eigenspace."""
        r = np.asarray(r, dtype=float)
        S = legendre_dirichlet_sums(lmax, np.sin(r / self.a))
        return 2.0 * S * np.cos(r / self.a) / self.a

    def profile(self, table, i):
        l = int(table.labels[i, 0])
        return lambda r: self._eigenspace_density(l, np.atleast_1d(r))[l] / l

    def collar_integrals(self, table, weights):
        if table.size == 0:
            return np.zeros((len(weights), 0))
        l = table.labels[:, 0]
        rule = CollarRule(weights, _panel_width(2.0 * (l.max() + 1) / self.a, weights))
        dens = self._eigenspace_density(int(l.max()), rule.nodes)[l] / l[:, None]
        return rule.integrate(dens)

    def kernel_terms(self, table, r):
        l = table.labels[:, 0]
        if l.size == 0:
            return np.zeros((np.size(r), 0))
        S = legendre_dirichlet_sums(int(l.max()), np.sin(np.asarray(r, dtype=float) / self.a))
        return (2.0 * S[l] / (2 * math.pi * self.a**2)).T


def spectrum_for(geom: ModelGeometry) -> Spectrum:
    if isinstance(geom, Interval):
        return IntervalSpectrum(geom)
    if isinstance(geom, Cylinder):
        return CylinderSpectrum(geom)
    if isinstance(geom, (Disk, Ball3)):
        return BesselSpectrum(geom)
    if isinstance(geom, Annulus):
        return AnnulusSpectrum(geom)
    if isinstance(geom, Hemisphere):
        return HemisphereSpectrum(geom)
    raise ValidationError(f"no spectrum for {type(geom).__name__}")


def eigenvalues(geom: ModelGeometry, lambda_max: float) -> list[SpectralLine]:
    """All Dirichlet eigenvalues <= lambda_max, nondecreasing, with multiplicities."""
    return spectrum_for(geom).lines(lambda_max)


def weyl_count(geom: ModelGeometry, lam: float) -> float:
    """Two-term Weyl estimate of the eigenvalue counting function (with multiplicity)."""
    m = geom.m
    area = sum(c.area for c in geom.boundary_data())
    w = lambda d: math.pi ** (d / 2) / math.gamma(d / 2 + 1)  # unit-ball volume
    return (w(m) * geom.volume * lam ** (m / 2) / (2 * math.pi) ** m
            - 0.25 * w(m - 1) * area * lam ** ((m - 1) / 2) / (2 * math.pi) ** (m - 1))
