import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from heattrace.errors import ValidationError
from heattrace.geometry import (
    ALL_KINDS,
    Annulus,
    Ball3,
    Cylinder,
    Disk,
    Hemisphere,
    Interval,
    Kind,
    boundary_data,
    make_geometry,
    product_with_circle,
    scale,
)
from heattrace.spectrum import eigenvalues

GEOMS = [Interval(math.pi), Disk(1.0), Annulus(0.5, 1.0), Cylinder(1.0, math.pi), Ball3(1.0), Hemisphere(1.0)]
DIMS = {Kind.INTERVAL: 1, Kind.DISK: 2, Kind.ANNULUS: 2, Kind.CYLINDER: 2, Kind.BALL3: 3, Kind.HEMISPHERE: 2}


def test_unit_disk_boundary():
    (c,) = boundary_data(Disk(1.0))
    assert c.area == pytest.approx(2 * math.pi)
    assert c.L_aa == 1.0
    r = np.linspace(0, 1, 7)
    np.testing.assert_allclose(c.jacobian(r), 1 - r)


def test_interval_boundary_points():
    comps = boundary_data(Interval(math.pi))
    assert len(comps) == 2
    for c in comps:
        assert c.area == 1.0 and c.L_aa == 0.0
        np.testing.assert_array_equal(c.jacobian(np.array([0.1, 1.0])), 1.0)


def test_ball_of_radius_two():
    (c,) = boundary_data(Ball3(2.0))
    assert c.area == pytest.approx(16 * math.pi)
    assert c.L_aa == pytest.approx(1.0)
    assert c.L_ab_L_ab == pytest.approx(0.5)
    assert c.R_amma == 0.0 and c.R_ijji == 0.0


def test_curvature_conventions():
    inner = [c for c in Annulus(0.5, 2.0).boundary_data() if c.name == "inner"][0]
    assert inner.L_aa == pytest.approx(-2.0)
    (eq,) = Hemisphere(1.0).boundary_data()
    assert eq.L_aa == 0.0 and eq.R_ijji == 2.0 and eq.R_amma == 1.0
    for g in (Interval(1.0), Cylinder(1.0, 2.0)):
        for c in g.boundary_data():
            assert c.L_aa == 0.0 and c.R_ijji == 0.0 and c.R_amma == 0.0


@pytest.mark.parametrize("g", GEOMS, ids=lambda g: g.kind.value)
def test_dimension_matches_kind(g):
    assert g.m == DIMS[g.kind]


@pytest.mark.parametrize("g", GEOMS, ids=lambda g: g.kind.value)
def test_jacobian_slope_is_minus_mean_curvature(g):
    h = 1e-6
    for c in g.boundary_data():
        assert float(c.jacobian(0.0)) == pytest.approx(1.0)
        slope = (float(c.jacobian(h)) - float(c.jacobian(-h))) / (2 * h)
        assert slope == pytest.approx(-c.L_aa, abs=1e-8)


@pytest.mark.parametrize("g", GEOMS, ids=lambda g: g.kind.value)
def test_jacobian_defect_consistent(g):
    for c in g.boundary_data():
        r = np.linspace(0.05, c.collar_width, 9)
        direct = (c.jacobian(r) - 1 + c.L_aa * r) / r**2
        np.testing.assert_allclose(c.jacobian_defect(r), direct, rtol=1e-10, atol=1e-12)


@given(st.sampled_from(range(len(GEOMS))), st.floats(0.1, 10.0))
def test_scaling_rules(i, c):
    g = GEOMS[i]
    gs = scale(g, c)
    assert gs.volume == pytest.approx(g.volume * c**g.m)
    for a, b in zip(g.boundary_data(), gs.boundary_data()):
        assert b.L_aa == pytest.approx(a.L_aa / c, abs=1e-15)
        assert b.R_ijji == pytest.approx(a.R_ijji / c**2)
        assert b.R_amma == pytest.approx(a.R_amma / c**2)
        assert b.area == pytest.approx(a.area * c ** (g.m - 1))
        assert b.collar_width == pytest.approx(a.collar_width * c)


def test_scale_examples():
    assert scale(Disk(1.0), 2.0) == Disk(2.0)
    lams = [ln.lam for ln in eigenvalues(scale(Interval(math.pi), 3.0), 10.0 / 9)]
    np.testing.assert_allclose(lams, [1 / 9, 4 / 9, 1.0])
    assert scale(Ball3(1.0), 4.0).boundary_data()[0].L_aa == pytest.approx(0.5)


@pytest.mark.parametrize("c", [0.0, -1.0, math.inf, math.nan])
def test_scale_rejects_bad_factor(c):
    with pytest.raises(ValidationError):
        scale(Disk(1.0), c)


def test_product_with_circle():
    cyl = product_with_circle(1.0, Interval(math.pi))
    assert cyl == Cylinder(1.0, math.pi)
    lines = eigenvalues(cyl, 2.5)
    assert lines[0].lam == pytest.approx(1.0) and lines[0].multiplicity == 1
    two = [ln for ln in lines if abs(ln.lam - 2.0) < 1e-12]
    assert sum(ln.multiplicity for ln in two) == 2
    with pytest.raises(ValidationError):
        product_with_circle(1.0, Disk(1.0))


@pytest.mark.parametrize(
    "factory",
    [lambda: Interval(0.0), lambda: Disk(-1.0), lambda: Annulus(1.0, 0.5), lambda: Annulus(1.0, 1.0),
     lambda: Cylinder(1.0, math.nan), lambda: Hemisphere(0)],
)
def test_invalid_parameters(factory):
    with pytest.raises(ValidationError):
        factory()


def test_make_geometry_defaults():
    for kind in ALL_KINDS:
        assert make_geometry(kind).kind.value == kind
    assert make_geometry("annulus", inner=0.2, outer=0.9) == Annulus(0.2, 0.9)
    with pytest.raises(ValidationError):
        make_geometry("torus")
