import math

import mpmath
import numpy as np
import pytest
import sympy
from hypothesis import assume, given
from hypothesis import strategies as st

from heattrace.errors import ExceptionalAlphaError, PoleError, ValidationError
from heattrace.geometry import Annulus, Ball3, Cylinder, Disk, Hemisphere, Interval
from heattrace.predict import (
    bochner_data,
    boundary_coefficient,
    boundary_coefficient_exceptional,
    boundary_coefficient_singular,
    boundary_coefficient_smooth,
    cauchy_product,
    circle_expansion,
    dropped_pole_boundary,
    full_expansion,
    interior_coefficient,
    kappa,
    kappa1_closed,
    kappa3_closed,
    kappa4_closed,
    kappa5_closed,
    log_coefficient,
    reference_kernels,
    substitute_scaled_time,
    universal_constants,
)
from heattrace.special import EULER_C
from heattrace.weight import CutoffSpec, WeightProfile, constant_weight

GEOMS = [Interval(math.pi), Disk(1.0), Annulus(0.5, 1.0), Cylinder(1.0, math.pi), Ball3(1.0), Hemisphere(1.0)]
SQPI = math.sqrt(math.pi)


def cutoff(g):
    w = min(c.collar_width for c in g.boundary_data())
    return CutoffSpec(0.4 * w, 0.6 * w)


coeff = st.floats(-3.0, 3.0)
geom_idx = st.sampled_from(range(len(GEOMS)))


# ---------------------------------------------------------------- constants


def test_kappa_examples():
    assert kappa(0.0) == pytest.approx(SQPI / 2)
    assert kappa(-1.0) == pytest.approx(0.5)
    assert kappa(0.5) == pytest.approx(float(mpmath.gamma(0.25)) / 2, rel=1e-14)
    assert kappa(0.5) == pytest.approx(1.812805, abs=1e-6)


@pytest.mark.parametrize("alpha", [1.0, 3.0, 5.0])
def test_kappa_poles(alpha):
    with pytest.raises(PoleError):
        kappa(alpha)


def test_structure_constants_at_zero_reproduce_smooth_weights():
    # (4 pi)^(-1/2) kappa^j_0 equals the smooth-case numerical weights
    n = (4 * math.pi) ** -0.5
    assert kappa1_closed(0.0) == pytest.approx(1 / 3)
    assert n * kappa3_closed(0.0) == pytest.approx(8 / 384)
    assert n * kappa4_closed(0.0) == pytest.approx(-7 / 384)
    assert n * kappa5_closed(0.0) == pytest.approx(10 / 384)


def test_universal_constants_dropped_pole():
    uc = universal_constants(1.0)
    assert uc.kappa == pytest.approx(-EULER_C / 2, abs=1e-9)
    assert universal_constants(0.3).kappa_bar == universal_constants(0.3).kappa


# ---------------------------------------------------------------- interior


def test_interior_examples():
    assert interior_coefficient(0, Disk(1.0), 0.0, constant_weight()).value == pytest.approx(0.25)
    assert interior_coefficient(1, Disk(1.0), 0.0, constant_weight()).value == 0.0
    assert interior_coefficient(1, Hemisphere(1.0), 0.0, constant_weight()).value == pytest.approx(1 / 6)
    with pytest.raises(ValidationError):
        interior_coefficient(2, Disk(1.0), 0.0, constant_weight())


# ---------------------------------------------------------------- boundary


def test_smooth_boundary_examples():
    # -(1/4)(4 pi)^(-1/2) 2 pi, the classical -|dD|/(8 sqrt(pi)) Weyl term
    assert boundary_coefficient_smooth(0, Disk(1.0), 0.0, (1.0,)) == pytest.approx(-SQPI / 4)
    F1 = 0.7
    got = boundary_coefficient_smooth(1, Interval(math.pi), 0.0, (1.0, F1), component=0)
    assert got == pytest.approx((4 * math.pi) ** -0.5 / 6 * (-3 * F1))
    got = boundary_coefficient_smooth(2, Ball3(1.0), 0.0, (1.0,))
    assert got == pytest.approx(-(1 / 384) / (4 * math.pi) * (7 * 4 - 10 * 2) * 4 * math.pi)


def test_singular_boundary_examples():
    got = boundary_coefficient_singular(0, 0.5, Disk(1.0), 0.0, (1.0,))
    assert got == pytest.approx(-float(mpmath.gamma(0.25)) / 4, rel=1e-14)
    assert got == pytest.approx(-0.9064, abs=1e-4)
    # F_0 L_aa channel of l = 1 at alpha = 1/2 on the unit disk
    got = boundary_coefficient_singular(1, 0.5, Disk(1.0), 0.0, (1.0,))
    expected = 0.5 * float(mpmath.gamma(0.75)) * (-3.5) / (2 * -2.5) * 2 * math.pi / (4 * math.pi)
    assert got == pytest.approx(expected, rel=1e-14)


def test_exceptional_examples():
    disk = Disk(1.0)
    assert boundary_coefficient_exceptional(0, 1, disk, 0.0, (1.0,)) == pytest.approx(EULER_C / 4)
    assert boundary_coefficient_exceptional(0, 2, disk, 0.0, (1.0,)) == pytest.approx(SQPI / 2)
    # F_0 L_aa coefficient of l = 1 at alpha = 2, times the disk factor (4 pi)^-1 2 pi
    assert boundary_coefficient_exceptional(1, 2, disk, 0.0, (1.0,)) == pytest.approx(-(EULER_C / 2 + 0.5) / 2)


def test_exceptional_dispatch():
    with pytest.raises(ExceptionalAlphaError):
        boundary_coefficient_singular(0, 1.0, Disk(1.0), 0.0, (1.0,))
    with pytest.raises(ValidationError):
        boundary_coefficient_exceptional(0, 1.5, Disk(1.0), 0.0, (1.0,))
    assert boundary_coefficient(0, 2.0, Disk(1.0), 0.0, (1.0,)) == pytest.approx(SQPI / 2)
    with pytest.raises(ValidationError):
        boundary_coefficient_singular(3, 0.5, Disk(1.0), 0.0, (1.0,))


@given(geom_idx, coeff, coeff, coeff, st.floats(-2.0, 2.0), st.sampled_from([0, 1, 2]))
def test_alpha_zero_reduces_to_smooth_case(i, f0, f1, f2, E, ell):
    g = GEOMS[i]
    s = boundary_coefficient_singular(ell, 0.0, g, E, (f0, f1, f2))
    m = boundary_coefficient_smooth(ell, g, E, (f0, f1, f2))
    assert abs(s - m) <= 1e-12 * max(1.0, abs(m))


@given(geom_idx, coeff, coeff, coeff, st.floats(-2.0, 2.0), st.sampled_from([0, 1, 2]), st.sampled_from([1, 2]))
def test_dropped_pole_consistency(i, f0, f1, f2, E, ell, a0):
    g = GEOMS[i]
    lc = dropped_pole_boundary(ell, a0, g, E, (f0, f1, f2)).constant
    ex = boundary_coefficient_exceptional(ell, a0, g, E, (f0, f1, f2))
    assert abs(lc - ex) <= 1e-7 * max(1.0, abs(ex))


@given(st.sampled_from([1, 2, 4, 5]), coeff, coeff, coeff, st.floats(-2.0, 2.0), st.sampled_from([0, 1]))
def test_pole_cancellation_at_one(i, f0, f1, f2, E, n):
    g = GEOMS[i]
    w = WeightProfile(1.0, (f0, f1, f2), cutoff(g))
    r_int = interior_coefficient(n, g, E, w).residue
    r_bd = dropped_pole_boundary(2 * n, 1, g, E, w).residue
    assert abs(r_int + r_bd) <= 1e-7 * max(1.0, abs(r_int))


# ---------------------------------------------------------------- logs and expansions


def test_log_coefficient_examples():
    disk = Disk(1.0)
    w = WeightProfile(1.0, (1.0,), CutoffSpec(0.4, 0.6))
    assert log_coefficient(1, 1.0, disk, w) == 0.0
    assert log_coefficient(0, 1.0, disk, w) == pytest.approx(-0.25)
    assert log_coefficient(0, 2.0, disk, w.with_alpha(2.0)) == pytest.approx(0.25)
    with pytest.raises(ValidationError):
        log_coefficient(0, 0.5, disk, w)


def test_interval_constant_weight_expansion():
    exp = full_expansion(Interval(math.pi), constant_weight())
    assert exp.coefficient(-0.5) == pytest.approx(SQPI / 2)
    assert exp.coefficient(0.0) == pytest.approx(-0.5)
    # classical two-term theta asymptotics
    t = 0.01
    direct = sum(math.exp(-t * k * k) for k in range(1, 400))
    assert exp.evaluate(t) == pytest.approx(direct, abs=1e-12)


def test_disk_exponent_ladder():
    exp = full_expansion(Disk(1.0), WeightProfile(0.5, (1.0,), CutoffSpec(0.4, 0.6)))
    assert [t.power for t in exp.terms] == pytest.approx([-1.0, -0.75, -0.25, 0.0, 0.25])
    assert not any(t.log for t in exp.terms)


def test_alpha_one_has_log_term():
    exp = full_expansion(Disk(1.0), WeightProfile(1.0, (1.0,), CutoffSpec(0.4, 0.6)))
    assert exp.coefficient(-1.0, log=True) == pytest.approx(-0.25)


@given(geom_idx, st.floats(-1.0, 2.9), coeff, coeff)
def test_expansion_invariants(i, alpha, f0, f1):
    g = GEOMS[i]
    exp = full_expansion(g, WeightProfile(alpha, (f0, f1), cutoff(g)))
    keys = [(round(t.power, 12), t.log) for t in exp.terms]
    assert len(keys) == len(set(keys))
    powers = [t.power for t in exp.terms]
    assert powers == sorted(powers)
    if alpha not in (1.0, 2.0):
        assert not any(t.log for t in exp.terms)


def _max_dev(a, b):
    keys = {(round(complex(t.power).real, 10), t.log) for t in a.terms + b.terms}
    return max(abs(complex(a.coefficient(p, lg)) - complex(b.coefficient(p, lg)))
               / max(1.0, abs(complex(b.coefficient(p, lg)))) for p, lg in keys)


@given(geom_idx, st.sampled_from([0.3, 1.0, 1.7, 2.0, 2.6]), st.floats(0.3, 4.0), st.floats(-1.0, 1.0))
def test_scaling_identity(i, alpha, c, E):
    g = GEOMS[i]
    w = WeightProfile(alpha, (1.1, -0.4, 0.3), cutoff(g))
    lhs = full_expansion(g.scale(c), w.scaled(c), E / c**2)
    rhs = substitute_scaled_time(full_expansion(g, w, E), c)
    assert _max_dev(lhs, rhs) <= 1e-12


@given(st.sampled_from([0.4, 1.0, 2.0, 2.5]), st.floats(0.3, 3.0), st.floats(-1.0, 1.0))
def test_cylinder_is_cauchy_product(alpha, rho, E):
    iv = Interval(math.pi)
    w = WeightProfile(alpha, (1.0, 0.5, -0.25), cutoff(iv))
    lhs = full_expansion(Cylinder(rho, math.pi), w, E)
    rhs = cauchy_product(circle_expansion(rho), full_expansion(iv, w, E))
    assert _max_dev(lhs, rhs) <= 1e-10


def test_expansion_json_roundtrip_shape():
    exp = full_expansion(Disk(1.0), WeightProfile(0.5 + 0.2j, (1.0,), CutoffSpec(0.4, 0.6)))
    js = exp.to_json()
    assert all(set(t) >= {"power", "log", "coeff"} for t in js["terms"])
    assert isinstance(js["terms"][1]["power"], list)


# ---------------------------------------------------------------- Bochner data and kernels


def test_bochner_euclidean_and_potential():
    x, y = sympy.symbols("x y")
    bd = bochner_data([1, 1], [x, y], [0, 0], 0, (0.3, 0.2))
    assert bd.omega == (0.0, 0.0) and bd.E == 0.0
    bd = bochner_data([1, 1], [x, y], [0, 0], sympy.Integer(3), (0.3, 0.2))
    assert bd.E == pytest.approx(3.0)


def test_bochner_polar_laplacian_has_no_endomorphism():
    r, th = sympy.symbols("r theta", positive=True)
    bd = bochner_data([1, r**2], [r, th], [1 / r, 0], 0, (0.5, 0.0))
    assert bd.E == pytest.approx(0.0, abs=1e-14)
    assert bd.omega == pytest.approx((0.0, 0.0), abs=1e-14)


def test_reference_kernels_limits():
    base, lang = reference_kernels(0.0, 0.01, 1.0)
    assert base == 0.0 and lang == 0.0
    base, lang = reference_kernels(50.0, 0.01, 1.0)
    assert base == pytest.approx(1 / (4 * math.pi * 0.01)) and lang == pytest.approx(base)
    with pytest.raises(ValidationError):
        reference_kernels(0.1, 0.0, 1.0)
