import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from heattrace.errors import ValidationError
from heattrace.weight import CutoffSpec, WeightProfile, constant_weight, evaluate, modified_taylor, smooth_step

CUT = CutoffSpec(0.3, 0.6)


def test_evaluate_examples():
    assert evaluate(WeightProfile(0.5, (1.0,), CUT), 0.25) == pytest.approx(2.0)
    assert evaluate(WeightProfile(1.0, (1.0, 2.0), CUT), 0.1) == pytest.approx(12.0)


@given(st.floats(0.6, 10.0), st.floats(-2.0, 2.9))
def test_zero_beyond_support(r, alpha):
    assert evaluate(WeightProfile(alpha, (1.0, -0.4, 2.0), CUT), r) == 0.0


@pytest.mark.parametrize("r", [0.0, -0.1])
def test_boundary_rejected(r):
    with pytest.raises(ValidationError):
        evaluate(WeightProfile(0.5, (1.0,), CUT), r)


def test_modified_taylor_defaults():
    w = WeightProfile(0.7, (3.0,), CUT)
    assert modified_taylor(w, 0) == 3.0 and modified_taylor(w, 1) == 0.0


@given(st.floats(-1.0, 2.5), st.lists(st.floats(-2.0, 2.0), min_size=1, max_size=3))
def test_taylor_coefficients_by_finite_differences(alpha, f):
    w = WeightProfile(alpha, tuple(f), CUT)
    # r^alpha F is a polynomial near 0; recover its coefficients from samples
    r = np.linspace(0.01, 0.05, 8)
    y = evaluate(w, r) * r**alpha
    fit = np.polynomial.polynomial.polyfit(r, y, 3)
    for i in range(3):
        assert fit[i] == pytest.approx(modified_taylor(w, i), abs=1e-6)


def test_product_weight_coefficients():
    w = WeightProfile(0.5, (1.0, -2.0, 0.5), CUT)
    p = w.times(3.0)
    assert [p.F(i) for i in range(3)] == [3.0, -6.0, 1.5]


def test_smooth_at_support_edge():
    w = WeightProfile(0.5, (1.0, 0.5), CUT)
    h = 1e-3
    r = np.array([CUT.eps - 2 * h, CUT.eps - h, CUT.eps, CUT.eps + h])
    v = evaluate(w, r)
    d1 = np.diff(v) / h
    d2 = np.diff(v, 2) / h**2
    assert np.max(np.abs(v)) < 1e-6
    assert np.max(np.abs(d1)) < 1e-6 and np.max(np.abs(d2)) < 1e-6


@given(st.floats(-1.0, 2.9), st.floats(-3.0, 3.0))
def test_leading_behaviour_at_boundary(alpha, f0):
    w = WeightProfile(alpha, (f0, 1.0), CUT)
    assert evaluate(w, 1e-9) * 1e-9**alpha == pytest.approx(f0, abs=1e-8)


@given(st.floats(0.2, 5.0), st.floats(-1.0, 2.9), st.floats(0.01, 0.59))
def test_scaled_weight_is_the_same_function(c, alpha, r):
    w = WeightProfile(alpha, (1.0, -0.3, 0.2), CUT)
    ws = w.scaled(c)
    for i in range(3):
        assert ws.F(i) == pytest.approx(c ** (alpha - i) * w.F(i))
    assert evaluate(ws, c * r) == pytest.approx(evaluate(w, r), rel=1e-12, abs=1e-300)


def test_smooth_step():
    x = np.linspace(-0.5, 1.5, 401)
    s = smooth_step(x)
    assert np.all(np.diff(s) >= 0)
    assert np.all(s[x <= 0] == 0) and np.all(s[x >= 1] == 1)
    assert smooth_step(0.5) == pytest.approx(0.5)


@pytest.mark.parametrize(
    "factory",
    [
        lambda: CutoffSpec(0.5, 0.5),
        lambda: CutoffSpec(0.0, 0.5),
        lambda: CutoffSpec(0.5, math.inf),
        lambda: WeightProfile(3.0, (1.0,), CUT),
        lambda: WeightProfile(3.2 + 1j, (1.0,), CUT),
        lambda: WeightProfile(0.5, (1.0,), None),
        lambda: WeightProfile(0.0, (1.0, 1.0), None),
        lambda: WeightProfile(0.5, (math.nan,), CUT),
    ],
)
def test_invalid_weights(factory):
    with pytest.raises(ValidationError):
        factory()


def test_constant_and_complex():
    c = constant_weight(2.0)
    assert c.is_constant and c.F(0) == 2.0
    z = WeightProfile(0.5 + 0.5j, (1.0,), CUT)
    assert not z.is_real
    assert evaluate(z, 0.1) == pytest.approx(np.exp(-(0.5 + 0.5j) * math.log(0.1)))
    assert WeightProfile(1 + 0j, (1.0,), CUT).alpha == 1.0
