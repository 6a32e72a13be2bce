"""Shared special-function layer.

Gamma is backed by scipy.special (Cephes for real arguments, a Lanczos-type
complex routine otherwise); tests cross-check it against mpmath.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
from scipy import special as _sp

from .errors import PoleError

EULER_C = 0.57721566490153286061  # Euler-Mascheroni constant, 20 digits

_POLE_TOL = 1e-14


def is_gamma_pole(z: complex) -> bool:
    z = complex(z)
    if abs(z.imag) > _POLE_TOL:
        return False
    x = z.real
    return x <= _POLE_TOL and abs(x - round(x)) <= _POLE_TOL


def gamma(z):
    """Gamma function for real or complex scalars.

    Raises PoleError at non-positive integers instead of returning inf.
    Real input gives a float, complex input a complex.
    """
    if is_gamma_pole(z):
        raise PoleError(f"Gamma has a pole at {z}")
    if isinstance(z, complex) and z.imag != 0.0:
        return complex(_sp.gamma(z))
    return float(_sp.gamma(float(np.real(z))))


def rgamma(z):
    """1/Gamma(z); entire, so zero at the poles of Gamma."""
    if isinstance(z, complex) and z.imag != 0.0:
        return complex(_sp.rgamma(z))
    return float(_sp.rgamma(float(np.real(z))))


def real_if_close(z, tol: float = 1e-15):
    """Drop a negligible imaginary part (relative to |z|)."""
    z = complex(z)
    if abs(z.imag) <= tol * max(1.0, abs(z.real)):
        return z.real
    return z


def cpow(base: float, exponent):
    """base**exponent for positive real base and real/complex exponent."""
    if isinstance(exponent, complex) and exponent.imag != 0.0:
        return cmath.exp(exponent * math.log(base))
    return base ** float(np.real(exponent))
