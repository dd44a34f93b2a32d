"""Exact generalized D'Arcais polynomials and the largest real zeros of
P_n(x)**(n+1) - P_{n+1}(x)**n."""

from sunroots.arith_functions import ArithFnSpec, gbar, gell, psi, sigma
from sunroots.darcais import PolySequence, generate, value_table
from sunroots.delta_zeros import (
    IsolatingInterval,
    build_delta,
    delta_sign_at,
    isolate_real_roots,
    largest_real_zero,
    verify_positive_beyond,
)
from sunroots.exact_core import Polynomial

__version__ = "0.1.0"

__all__ = [
    "ArithFnSpec",
    "IsolatingInterval",
    "PolySequence",
    "Polynomial",
    "build_delta",
    "delta_sign_at",
    "gbar",
    "gell",
    "generate",
    "isolate_real_roots",
    "largest_real_zero",
    "psi",
    "sigma",
    "value_table",
    "verify_positive_beyond",
]
