"""Model manifolds with exact Dirichlet spectra and their boundary data.

Every geometry carries a geodesic collar per boundary component.  Inside a
collar the Riemannian measure is ``dx = J(r) dr dy`` with ``r`` the distance
to the boundary along the inward normal, so ``J(0) = 1`` and
``J'(0) = -L_aa``.  The inward normal is used for every component, which
makes the inner circle of an annulus concave (``L_aa = -1/R_in``).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import ValidationError


class Kind(str, enum.Enum):
    INTERVAL = "interval"
    DISK = "disk"
    ANNULUS = "annulus"
    CYLINDER = "cylinder"
    BALL3 = "ball3"
    HEMISPHERE = "hemisphere"


@dataclass(frozen=True)
class BoundaryComponent:
    """Scalar boundary invariants of one component (constant along it).

    ``jacobian_defect(r)`` returns ``(J(r) - 1 + L_aa r) / r**2``, evaluated
    in a cancellation-free form; regularized integrals need it near r = 0.
    """

    name: str
    area: float
    L_ab: tuple[float, ...]
    R_amma: float
    R_ijji: float
    collar_width: float
    jacobian: Callable[[np.ndarray], np.ndarray] = field(repr=False, compare=False)
    jacobian_defect: Callable[[np.ndarray], np.ndarray] = field(repr=False, compare=False)

    @property
    def L_aa(self) -> float:
        return float(sum(self.L_ab))

    @property
    def L_ab_L_ab(self) -> float:
        return float(sum(x * x for x in self.L_ab))


def _const(value: float):
    return lambda r: np.full_like(np.asarray(r, dtype=float), value)


def _linear(slope: float):
    return lambda r: 1.0 + slope * np.asarray(r, dtype=float)


@dataclass(frozen=True)
class ModelGeometry:
    """Base class; use the concrete constructors below."""

    @property
    def kind(self) -> Kind:
        raise NotImplementedError

    @property
    def m(self) -> int:
        raise NotImplementedError

    @property
    def volume(self) -> float:
        raise NotImplementedError

    @property
    def scalar_curvature(self) -> float:
        """Interior R_ijji (constant on every model geometry)."""
        return 0.0

    def boundary_data(self) -> list[BoundaryComponent]:
        raise NotImplementedError

    def scale(self, c: float) -> "ModelGeometry":
        raise NotImplementedError

    @property
    def params(self) -> dict:
        return {k: v for k, v in self.__dict__.items()}

    def describe(self) -> dict:
        return {"geometry": self.kind.value, **self.params}


def _positive(**lengths):
    for name, value in lengths.items():
        if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
            raise ValidationError(f"{name} must be a positive finite number, got {value!r}")


def _check_scale(c):
    if not (math.isfinite(c) and c > 0):
        raise ValidationError(f"scale factor must be positive, got {c!r}")


@dataclass(frozen=True)
class Interval(ModelGeometry):
    length: float = math.pi

    def __post_init__(self):
        _positive(length=self.length)

    kind = property(lambda self: Kind.INTERVAL)
    m = property(lambda self: 1)
    volume = property(lambda self: float(self.length))

    def boundary_data(self):
        half = 0.5 * self.length
        return [
            BoundaryComponent(name, 1.0, (), 0.0, 0.0, half, _const(1.0), _const(0.0))
            for name in ("left", "right")
        ]

    def scale(self, c):
        _check_scale(c)
        return Interval(self.length * c)


@dataclass(frozen=True)
class Disk(ModelGeometry):
    radius: float = 1.0

    def __post_init__(self):
        _positive(radius=self.radius)

    kind = property(lambda self: Kind.DISK)
    m = property(lambda self: 2)
    volume = property(lambda self: math.pi * self.radius**2)

    def boundary_data(self):
        R = self.radius
        return [
            BoundaryComponent(
                "circle", 2 * math.pi * R, (1.0 / R,), 0.0, 0.0, R, _linear(-1.0 / R), _const(0.0)
            )
        ]

    def scale(self, c):
        _check_scale(c)
        return Disk(self.radius * c)


@dataclass(frozen=True)
class Annulus(ModelGeometry):
    inner: float = 0.5
    outer: float = 1.0

    def __post_init__(self):
        _positive(inner=self.inner, outer=self.outer)
        if not self.inner < self.outer:
            raise ValidationError("annulus requires inner < outer")

    kind = property(lambda self: Kind.ANNULUS)
    m = property(lambda self: 2)
    volume = property(lambda self: math.pi * (self.outer**2 - self.inner**2))

    def boundary_data(self):
        a, b = self.inner, self.outer
        half = 0.5 * (b - a)
        return [
            BoundaryComponent(
                "outer", 2 * math.pi * b, (1.0 / b,), 0.0, 0.0, half, _linear(-1.0 / b), _const(0.0)
            ),
            BoundaryComponent(
                "inner", 2 * math.pi * a, (-1.0 / a,), 0.0, 0.0, half, _linear(1.0 / a), _const(0.0)
            ),
        ]

    def scale(self, c):
        _check_scale(c)
        return Annulus(self.inner * c, self.outer * c)


@dataclass(frozen=True)
class Cylinder(ModelGeometry):
    """Flat cylinder S^1_rho x [0, length]."""

    rho: float = 1.0
    length: float = math.pi

    def __post_init__(self):
        _positive(rho=self.rho, length=self.length)

    kind = property(lambda self: Kind.CYLINDER)
    m = property(lambda self: 2)
    volume = property(lambda self: 2 * math.pi * self.rho * self.length)

    def boundary_data(self):
        half = 0.5 * self.length
        area = 2 * math.pi * self.rho
        return [
            BoundaryComponent(name, area, (0.0,), 0.0, 0.0, half, _const(1.0), _const(0.0))
            for name in ("bottom", "top")
        ]

    def scale(self, c):
        _check_scale(c)
        return Cylinder(self.rho * c, self.length * c)


@dataclass(frozen=True)
class Ball3(ModelGeometry):
    radius: float = 1.0

    def __post_init__(self):
        _positive(radius=self.radius)

    kind = property(lambda self: Kind.BALL3)
    m = property(lambda self: 3)
    volume = property(lambda self: 4.0 * math.pi * self.radius**3 / 3.0)

    def boundary_data(self):
        R = self.radius
        return [
            BoundaryComponent(
                "sphere",
                4 * math.pi * R**2,
                (1.0 / R, 1.0 / R),
                0.0,
                0.0,
                R,
                lambda r: (1.0 - np.asarray(r, dtype=float) / R) ** 2,
                _const(1.0 / R**2),
            )
        ]

    def scale(self, c):
        _check_scale(c)
        return Ball3(self.radius * c)


@dataclass(frozen=True)
class Hemisphere(ModelGeometry):
    """Upper hemisphere of the round sphere of the given radius.

    The equator is totally geodesic; the collar coordinate is the latitude
    arc length, so J(r) = cos(r / radius).
    """

    radius: float = 1.0

    def __post_init__(self):
        _positive(radius=self.radius)

    kind = property(lambda self: Kind.HEMISPHERE)
    m = property(lambda self: 2)
    volume = property(lambda self: 2 * math.pi * self.radius**2)
    scalar_curvature = property(lambda self: 2.0 / self.radius**2)

    def boundary_data(self):
        a = self.radius

        def defect(r):
            s = np.sin(0.5 * np.asarray(r, dtype=float) / a)
            with np.errstate(invalid="ignore", divide="ignore"):
                out = -2.0 * s * s / np.asarray(r, dtype=float) ** 2
            return np.where(np.asarray(r) == 0.0, -0.5 / a**2, out)

        return [
            BoundaryComponent(
                "equator",
                2 * math.pi * a,
                (0.0,),
                1.0 / a**2,
                2.0 / a**2,
                0.5 * math.pi * a,
                lambda r: np.cos(np.asarray(r, dtype=float) / a),
                defect,
            )
        ]

    def scale(self, c):
        _check_scale(c)
        return Hemisphere(self.radius * c)


def boundary_data(geom: ModelGeometry) -> list[BoundaryComponent]:
    return geom.boundary_data()


def scale(geom: ModelGeometry, c: float) -> ModelGeometry:
    """Metric rescaling g -> c^2 g: lengths times c, eigenvalues over c^2."""
    return geom.scale(c)


def product_with_circle(rho: float, geom: ModelGeometry) -> Cylinder:
    """S^1_rho x M; only M = Interval is a supported model geometry."""
    if not isinstance(geom, Interval):
        raise ValidationError(f"product with a circle is only supported for intervals, not {geom.kind.value}")
    return Cylinder(rho, geom.length)


def make_geometry(kind: str, *, length=None, radius=None, inner=None, outer=None, rho=None) -> ModelGeometry:
    """Build a geometry from CLI-style keyword parameters."""
    try:
        kind = Kind(kind)
    except ValueError:
        raise ValidationError(f"unknown geometry {kind!r}") from None
    if kind is Kind.INTERVAL:
        return Interval(math.pi if length is None else length)
    if kind is Kind.DISK:
        return Disk(1.0 if radius is None else radius)
    if kind is Kind.ANNULUS:
        return Annulus(0.5 if inner is None else inner, 1.0 if outer is None else outer)
    if kind is Kind.CYLINDER:
        return Cylinder(1.0 if rho is None else rho, math.pi if length is None else length)
    if kind is Kind.BALL3:
        return Ball3(1.0 if radius is None else radius)
    return Hemisphere(1.0 if radius is None else radius)


ALL_KINDS = tuple(k.value for k in Kind)
