"""Exact Dirichlet spectra, weighted heat traces and diagonal heat kernels."""

from .bessel import annulus_zeros, bessel_zero, bessel_zeros
from .modes import SpectralLine, eigenvalues, legendre_dirichlet_sums, spectrum_for, weyl_count
from .trace import TraceSamples, diagonal_kernel, tail_bound, weighted_trace, weighted_traces

__all__ = [
    "SpectralLine",
    "TraceSamples",
    "annulus_zeros",
    "bessel_zero",
    "bessel_zeros",
    "diagonal_kernel",
    "eigenvalues",
    "legendre_dirichlet_sums",
    "spectrum_for",
    "tail_bound",
    "weighted_trace",
    "weighted_traces",
    "weyl_count",
]
