"""Panel quadrature for collar integrals int_0^eps r^-alpha S(r) rho(r) dr.

The first panel carries the endpoint singularity: since rho(r) = O(r^2)
(Dirichlet condition) the integrand is r^(2-alpha) times a smooth function,
integrated by product integration at Gauss-Legendre nodes against the weight
(1+tau)^beta.  The node positions do not depend on alpha, so one set of
eigenfunction evaluations serves several weights at once.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy import special

from ..errors import ValidationError
from ..weight import WeightProfile

GL_ORDER = 24
# panels across the cutoff transition
TRANSITION_PANELS = 5


@lru_cache(maxsize=None)
def gauss_legendre(n: int = GL_ORDER) -> tuple[np.ndarray, np.ndarray]:
    x, w = leggauss(n)
    x.flags.writeable = False
    w.flags.writeable = False
    return x, w


@lru_cache(maxsize=256)
def _power_weights(beta: float, n: int) -> np.ndarray:
    """Weights W with int_{-1}^{1} (1+tau)^beta g(tau) dtau ~ sum W_i g(tau_i).

    Exact for polynomials of degree < n.  Uses the Legendre moments
    int (1+tau)^beta P_k(tau) dtau = 2^(beta+1) Gamma(beta+1)^2 / (Gamma(beta+k+2) Gamma(beta+1-k)).
    """
    if not beta > -1:
        raise ValidationError(f"power weight exponent must exceed -1, got {beta}")
    x, w = gauss_legendre(n)
    ks = np.arange(n)
    moments = 2.0 ** (beta + 1) * special.gamma(beta + 1) ** 2 * special.rgamma(beta + ks + 2) * special.rgamma(beta + 1 - ks)
    P = np.array([special.eval_legendre(k, x) for k in ks])  # (n, nodes)
    W = w * (((ks + 0.5) * moments) @ P)
    W.flags.writeable = False
    return W


def power_weights(beta: float, n: int = GL_ORDER) -> np.ndarray:
    return _power_weights(float(beta), int(n))


def singular_panel(h: float, alphas, n: int = GL_ORDER):
    """Nodes r in (0, h) and per-alpha weights for int_0^h r^(2-alpha) g(r) dr."""
    x, _ = gauss_legendre(n)
    r = 0.5 * h * (1.0 + x)
    Ws = [power_weights(2.0 - a, n) * (0.5 * h) ** (3.0 - a) for a in alphas]
    return r, Ws


def panel_nodes(edges: np.ndarray, n: int = GL_ORDER) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights on consecutive panels, shape (panels, n)."""
    x, w = gauss_legendre(n)
    edges = np.asarray(edges, dtype=float)
    mid = 0.5 * (edges[1:] + edges[:-1])[:, None]
    half = 0.5 * (edges[1:] - edges[:-1])[:, None]
    return mid + half * x, half * w


def uniform_edges(a: float, b: float, h: float) -> np.ndarray:
    count = max(1, math.ceil((b - a) / h - 1e-12))
    return np.linspace(a, b, count + 1)


def check_real(weight: WeightProfile):
    if not weight.is_real:
        raise ValidationError("numeric traces need a real alpha")


def transition_width(weights) -> float:
    """Smallest cutoff transition eps - eps0 among the (cut-off) weights."""
    ws = [w.cutoff.eps - w.cutoff.eps0 for w in weights if w.cutoff is not None]
    return min(ws) if ws else math.inf


def support(weights) -> float:
    return max(w.cutoff.eps for w in weights if w.cutoff is not None)


class CollarRule:
    """Shared nodes on [0, eps] plus per-weight vectors V with int F rho ~ V @ rho(nodes)."""

    def __init__(self, weights, h: float, n: int = GL_ORDER):
        for w in weights:
            check_real(w)
        eps = support(weights)
        h = min(h, eps)
        r0, Ws = singular_panel(h, [w.alpha for w in weights], n)
        nodes, gw = panel_nodes(uniform_edges(h, eps, h), n)
        self.nodes = np.concatenate([r0, nodes.ravel()])
        gw = gw.ravel()
        self.first = r0.size
        vecs = []
        for w, W in zip(weights, Ws):
            head = W * w.smooth_part(r0) / r0**2
            tail = gw * w.evaluate(nodes.ravel())
            vecs.append(np.concatenate([head, tail]))
        self.V = np.array(vecs)

    def integrate(self, rho: np.ndarray) -> np.ndarray:
        """rho: (modes, nodes) collar densities -> (weights, modes) integrals."""
        rho = np.atleast_2d(rho)
        return np.array([np.sum(rho * v, axis=1) for v in self.V])
