"""Exact computation and instance-wise verification of classical and
q-analog harmonic, hyperharmonic, Stirling, and Bernoulli identities over
the rational-function field Q(q)."""

__version__ = "0.1.0"

from .qpoly import BigRat, PoleError, QPoly, QRatFn, parse_qpoly, parse_qratfn, poly_gcd, render_qpoly, render_qratfn

__all__ = [
    "__version__",
    "BigRat",
    "PoleError",
    "QPoly",
    "QRatFn",
    "parse_qpoly",
    "parse_qratfn",
    "poly_gcd",
    "render_qpoly",
    "render_qratfn",
]
