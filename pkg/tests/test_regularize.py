import math

import mpmath
import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st
from scipy import integrate

from heattrace.errors import ValidationError
from heattrace.geometry import Disk, Hemisphere, Interval
from heattrace.predict import kappa
from heattrace.regularize import ExtrapolationError, exceptional_index, i_reg, i_reg_weight, laurent_constant
from heattrace.weight import CutoffSpec, WeightProfile

# flat half-collar [0, 1]: one endpoint of an interval of length 2
FLAT = Interval(2.0).boundary_data()[0]


def _poly_density(alpha, c1, c2):
    return lambda r: r ** (-alpha) * (1.0 + c1 * r + c2 * r * r)


def test_plain_integral_below_one():
    rv = i_reg(1.0, 0.0, FLAT, 0.5, lambda r: r**-0.5, eps=0.5)
    assert rv.value == pytest.approx(2.0, abs=1e-12)
    assert not rv.pole_dropped and rv.residue == 0.0


def test_dropped_pole_for_inverse_distance():
    rv = i_reg(1.0, 0.0, FLAT, 1.0, lambda r: 1.0 / r, eps=0.3)
    assert rv.value == pytest.approx(0.0, abs=1e-12)
    assert rv.pole_dropped
    assert rv.residue == pytest.approx(-1.0)


@given(
    st.floats(-0.9, 2.9),
    st.floats(-2.0, 2.0),
    st.floats(-2.0, 2.0),
    st.floats(0.05, 1.0),
    st.floats(0.05, 1.0),
)
def test_eps_independence(alpha, c1, c2, e1, e2):
    assume(min(abs(alpha - 1), abs(alpha - 2)) > 0.05)
    H = _poly_density(alpha, c1, c2)
    # closed-form (H - subtracted) / r^(2 - alpha) avoids cancellation near r = 0
    kw = dict(remainder=lambda r: c2, remainder_upto=1.0)
    a = i_reg(1.0, c1, FLAT, alpha, H, e1, **kw).value
    b = i_reg(1.0, c1, FLAT, alpha, H, e2, **kw).value
    assert abs(a - b) <= 1e-10 * max(1.0, abs(a))


@given(st.floats(-0.9, 1.5), st.floats(-2.0, 2.0), st.floats(0.05, 1.0), st.floats(0.05, 1.0))
def test_eps_independence_without_remainder(alpha, c2, e1, e2):
    assume(abs(alpha - 1) > 0.05)
    H = _poly_density(alpha, 0.0, c2)
    a = i_reg(1.0, 0.0, FLAT, alpha, H, e1).value
    b = i_reg(1.0, 0.0, FLAT, alpha, H, e2).value
    assert abs(a - b) <= 1e-10 * max(1.0, abs(a))


@given(st.floats(-0.9, 0.9), st.floats(-2.0, 2.0), st.floats(-2.0, 2.0), st.floats(0.05, 1.0))
def test_agrees_with_plain_quadrature_below_one(alpha, c1, c2, eps):
    ref = integrate.quad(lambda r: 1.0 + c1 * r + c2 * r * r, 0, 1, weight="alg", wvar=(-alpha, 0),
                         epsabs=1e-14, epsrel=1e-13)[0]
    got = i_reg(1.0, c1, FLAT, alpha, _poly_density(alpha, c1, c2), eps).value
    assert got == pytest.approx(ref, rel=1e-8, abs=1e-10)


@given(st.floats(-0.5, 2.5))
def test_holomorphic_in_alpha(alpha):
    assume(min(abs(alpha - 1), abs(alpha - 2)) > 0.05)
    d = 1e-6
    f = lambda a: i_reg(1.0, 0.5, FLAT, a, _poly_density(a, 0.5, 0.2), 0.4).value
    assert abs(f(alpha + d) - f(alpha)) < 1e-3


def test_complex_alpha_continuation():
    # int_0^1 r^-a dr = 1 / (1 - a) continued past Re(a) = 1
    for a in (0.4 + 0.3j, 1.5 + 0.2j, 2.5 - 0.7j):
        got = i_reg(1.0, 0.0, FLAT, a, lambda r, a=a: np.exp(-a * math.log(r)), 0.5).value
        assert abs(got - 1 / (1 - a)) < 1e-10


@pytest.mark.parametrize("alpha", [3.0, 3.5, 3.0 + 1j])
def test_rejects_large_alpha(alpha):
    with pytest.raises(ValidationError):
        i_reg(1.0, 0.0, FLAT, alpha, lambda r: 1.0, 0.5)


def test_rejects_eps_beyond_collar():
    with pytest.raises(ValidationError):
        i_reg(1.0, 0.0, FLAT, 0.5, lambda r: r**-0.5, 1.5)


def test_weight_version_eps_independent_on_curved_geometries():
    for g in (Disk(1.0), Hemisphere(1.0)):
        w_col = min(c.collar_width for c in g.boundary_data())
        cut = CutoffSpec(0.4 * w_col, 0.6 * w_col)
        for alpha in (0.3, 1.0, 2.0, 2.5, 1.2 + 0.5j):
            w = WeightProfile(alpha, (1.0, -0.5, 0.25), cut)
            vals = [complex(i_reg_weight(w, g, eps=f * cut.eps0).value) for f in (0.2, 0.6, 1.0, 1.4)]
            assert max(abs(v - vals[0]) for v in vals) <= 1e-10 * max(1.0, abs(vals[0]))


def test_residue_only_at_exceptional_alpha():
    g = Disk(1.0)
    cut = CutoffSpec(0.4, 0.6)
    for alpha in (0.5, 1.5, 2.5):
        assert i_reg_weight(WeightProfile(alpha, (1.0, 0.3), cut), g).residue == 0.0
    r1 = i_reg_weight(WeightProfile(1.0, (1.0, 0.3), cut), g)
    r2 = i_reg_weight(WeightProfile(2.0, (1.0, 0.3), cut), g)
    assert r1.pole_dropped and r1.residue == pytest.approx(-2 * math.pi)
    # at alpha = 2 the pole comes from F_1 - F_0 L_aa
    assert r2.pole_dropped and r2.residue == pytest.approx(-2 * math.pi * (0.3 - 1.0))
    assert i_reg_weight(WeightProfile(2.0, (1.0, 1.0), cut), g).residue == pytest.approx(0.0, abs=1e-14)


def test_laurent_simple_pole():
    res = laurent_constant(lambda a: 1 / (a - 1) + 5, 1.0)
    assert res.constant == pytest.approx(5.0, abs=1e-9)
    assert res.residue == pytest.approx(1.0, abs=1e-9)


def test_laurent_kappa_at_one_matches_digamma_oracle():
    # 1/2 Gamma((1 - a)/2) = 1/(1 - a) + psi(1)/2 + O(1 - a)
    oracle = float(mpmath.digamma(1)) / 2
    res = laurent_constant(kappa, 1.0)
    assert res.constant == pytest.approx(oracle, abs=1e-9)
    assert res.residue == pytest.approx(-1.0, abs=1e-9)


def test_laurent_regular_point():
    res = laurent_constant(kappa, 2.0)
    assert res.constant == pytest.approx(-math.sqrt(math.pi), abs=1e-9)
    assert res.residue == pytest.approx(0.0, abs=1e-9)


def test_laurent_double_pole_reported():
    with pytest.raises(ExtrapolationError):
        laurent_constant(lambda a: 1 / (a - 1) ** 2, 1.0)


def test_exceptional_index():
    assert exceptional_index(1) == 1 and exceptional_index(2.0 + 0j) == 2
    assert exceptional_index(1.0000001) is None and exceptional_index(1 + 1e-9j) is None
