import itertools
import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from heattrace.errors import PoleError, ValidationError
from heattrace.predict import kappa
from heattrace.symbols import (
    LambdaTerm,
    c_multiplier,
    d_multiplier,
    gaussian_moment,
    h4_values,
    half_derivative,
    normalization,
    verify_all,
    verify_h2,
    verify_h3,
    verify_h4,
)
from heattrace.symbols.alpha_expr import ALPHA, poly
from heattrace.symbols.calculus import apply_half_derivative, d_code, h4_channel_closed, profile

SQPI = math.sqrt(math.pi)


def test_half_derivative_examples():
    (t,) = half_derivative(LambdaTerm(poly(1), 0, (Fraction(-1), Fraction(0))))
    assert t.a == -1 and t.b == (Fraction(-2), Fraction(0))
    assert t.coeff.as_expr() == sympy.Rational(-1, 2)
    (t,) = half_derivative(LambdaTerm(poly(1), 1, (Fraction(0), Fraction(0))))
    assert (t.a, t.b) == (-1, (0, 0)) and t.coeff.as_expr() == sympy.Rational(1, 2)


@pytest.mark.parametrize("n,k,l", [(2, 1, 0), (3, 0, 1), (3, 2, 2), (4, 1, 3)])
def test_repeated_half_derivative_matches_sympy(n, k, l):
    lam, z = sympy.symbols("lam z", positive=True)
    a = sympy.Rational(2, 5)
    f = lam ** (k - 1) * (lam + z) ** (a - l - 1)
    for _ in range(n - 1):
        f = sympy.diff(f, lam) / (2 * lam)
    ref = float(f.subs({lam: sympy.Rational(13, 10), z: sympy.Rational(7, 10)}))
    got = sum(t.evaluate(1.3, 0.7, 0.4) for t in apply_half_derivative([profile(k, l)], n - 1))
    assert got == pytest.approx(ref, rel=1e-12)


@given(st.integers(0, 3), st.integers(0, 5), st.floats(-1.5, 2.9))
def test_c_multiplier_low_orders(k, l, alpha):
    assert complex(c_multiplier(1, k, l)(alpha)).real == pytest.approx(2.0 ** (alpha - l - 1), rel=1e-13)
    c2 = 2.0 ** (alpha - l - 2) * ((k - 1) - (l + 1 - alpha) / 2)
    assert complex(c_multiplier(2, k, l)(alpha)).real == pytest.approx(c2, rel=1e-12, abs=1e-14)


def test_homogeneity_check_passes_everywhere():
    for n, k, l in itertools.product(range(1, 6), range(0, 4), range(0, 6)):
        c_multiplier(n, k, l)  # raises InternalConsistencyError on an exponent mismatch


def test_c_multiplier_rejects_n0():
    with pytest.raises(ValidationError):
        c_multiplier(0, 0, 0)


@pytest.mark.parametrize("alpha", [0.0, 0.3, -0.9, 1.4, 2.6])
def test_d0001_identities(alpha):
    d = complex(d_code("0001")(alpha)).real
    assert d == pytest.approx(2**alpha * math.pi**2 * math.gamma(1 - alpha) / math.gamma(1 - alpha / 2), rel=1e-13)
    assert d == pytest.approx(math.pi * math.gamma((1 - alpha) / 2) * SQPI, rel=1e-13)
    if alpha == 0.0:
        assert d == pytest.approx(math.pi**2, rel=1e-15)


def test_d_pole_raises():
    with pytest.raises(PoleError):
        d_code("0001")(1.0)


def test_d_i_power():
    for k in range(4):
        assert d_multiplier(k, 1, 2, 2).i_power == k % 4
    assert complex(d_code("1002")(0.3)).real == 0.0


def test_d0101_high_precision():
    a = mpmath.mpf("0.3")
    with mpmath.workdps(60):
        # k=0, l=1, j=0, n=1: c_{1,0,1} = 2^(a-2), sign (-1)^(n+k+1) = +1
        c = mpmath.power(2, a - 2)
        ref = 2 * mpmath.pi**2 * mpmath.gamma(2 - a) * c / mpmath.gamma((1 - a) / 2 + 1)
    assert complex(d_code("0101")(0.3)).real == pytest.approx(float(ref), rel=1e-14)


def test_verifications_pass():
    assert verify_h2().ok and verify_h3().ok and verify_h4().ok
    assert verify_all()["pass"]


def test_recovered_constants_at_zero():
    kbar0 = -normalization(complex(d_code("0001")(0.0)))
    assert kbar0.real == pytest.approx(SQPI / 2, rel=1e-13)
    assert verify_h3(0.0).recovered["kappa1"][0.0].real == pytest.approx(1 / 3, rel=1e-13)
    v = h4_values(0.0)
    n = (4 * math.pi) ** -0.5
    assert v.kappa3.real == pytest.approx(SQPI / 24, rel=1e-12)
    assert (n * v.kappa4).real == pytest.approx(-7 / 384, rel=1e-12)
    assert (n * v.kappa5).real == pytest.approx(10 / 384, rel=1e-12)
    assert h4_channel_closed("second_derivative", 0.0) == pytest.approx(SQPI / 16)


def test_h3_rejects_alpha_three():
    with pytest.raises(ValidationError):
        verify_h3(3.0)


def _gauss_hermite_moment(G, idx, order=12):
    y, w = np.polynomial.hermite.hermgauss(order)
    n = G.shape[0]
    C = np.linalg.cholesky(G)
    total = 0.0
    for nodes in itertools.product(range(order), repeat=n):
        yy = y[list(nodes)]
        ww = np.prod(w[list(nodes)])
        x = C @ yy
        total += ww * np.prod([x[i] for i in idx])
    return total * math.sqrt(np.linalg.det(G))


@pytest.mark.parametrize("G", [np.array([[1.3, 0.2], [0.2, 0.8]]),
                               np.array([[1.0, 0.1, -0.2], [0.1, 0.9, 0.05], [-0.2, 0.05, 1.4]])])
def test_gaussian_moments_match_gauss_hermite(G):
    n = G.shape[0]
    for idx in [(), (0, 0), (0, 1), (0, 0, 1, 1), (0, 1, 0, n - 1), (1,)]:
        assert gaussian_moment(G, idx) == pytest.approx(_gauss_hermite_moment(G, idx), rel=1e-12, abs=1e-14)
