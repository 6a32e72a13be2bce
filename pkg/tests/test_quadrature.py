import math

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import integrate

from heattrace.errors import ValidationError
from heattrace.spectrum.quadrature import CollarRule, power_weights, singular_panel
from heattrace.weight import CutoffSpec, WeightProfile


@given(st.floats(-0.95, 4.0), st.integers(0, 23))
def test_power_weights_exact_on_monomials(beta, k):
    # int_{-1}^1 (1+tau)^beta (1+tau)^k dtau = 2^(beta+k+1) / (beta+k+1)
    x, _ = np.polynomial.legendre.leggauss(24)
    got = power_weights(beta) @ (1 + x) ** k
    exact = 2.0 ** (beta + k + 1) / (beta + k + 1)
    assert got == pytest.approx(exact, rel=1e-11)


def test_power_weights_reject_nonintegrable():
    with pytest.raises(ValidationError):
        power_weights(-1.0)


@pytest.mark.parametrize("alpha", [0.25, 1.0, 1.5, 2.5, 2.9])
def test_singular_panel_against_mpmath(alpha):
    h = 0.3
    g = lambda r: math.cos(3 * r) * math.exp(r)
    r, (W,) = singular_panel(h, [alpha])
    got = W @ np.array([g(x) for x in r])
    # u = r^(1/p) removes the endpoint singularity for the oracle
    p = 10
    with mpmath.workdps(30):
        f = lambda u: p * u ** (p - 1) * (u**p) ** (2 - alpha) * mpmath.cos(3 * u**p) * mpmath.exp(u**p)
        ref = float(mpmath.quad(f, [0, h ** (1 / p)]))
    assert got == pytest.approx(ref, rel=1e-13)


@pytest.mark.parametrize("alpha", [0.0, 0.5, 1.0, 2.0, 2.7])
def test_collar_rule_matches_scipy(alpha):
    w = WeightProfile(alpha, (1.0, -0.4, 0.2), CutoffSpec(0.3, 0.5))
    rule = CollarRule([w], h=0.05)
    ks = np.array([1.0, 7.0, 23.0])
    rho = np.sin(np.outer(ks, rule.nodes)) ** 2
    got = rule.integrate(rho)[0]
    for k, val in zip(ks, got):
        g = lambda r: w.smooth_part(r) * (k * np.sinc(k * r / math.pi)) ** 2
        ref, _ = integrate.quad(g, 0, 0.5, weight="alg", wvar=(2 - alpha, 0), epsabs=1e-15, epsrel=1e-13, limit=400)
        assert val == pytest.approx(ref, rel=1e-11, abs=1e-14)


def test_collar_rule_rejects_complex_alpha():
    with pytest.raises(ValidationError):
        CollarRule([WeightProfile(0.5 + 0.1j, (1.0,), CutoffSpec(0.3, 0.5))], h=0.05)
