"""Closed forms for the psi_0 and psi_1 sequences.

g = psi_0 gives rising factorials x(x+1)...(x+n-1)/n!, and g = psi_1 gives
(x/n) * L_{n-1}^{(1)}(-x) with L^{(alpha)} the associated Laguerre
polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from sunroots.arith_functions import psi
from sunroots.darcais import generate
from sunroots.exact_core import ONE, X, Polynomial


@dataclass(frozen=True)
class LaguerreParams:
    n: int
    alpha: int = 1

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if self.n + self.alpha < 0:
            raise ValueError(f"need n + alpha >= 0, got n={self.n}, alpha={self.alpha}")


def pochhammer_poly(n: int) -> Polynomial:
    if n < 0:
        raise ValueError("n must be non-negative")
    out = ONE
    for k in range(n):
        out = out * (X + k)
    return out / factorial(n)


def laguerre_poly(n: int, alpha: int = 1) -> Polynomial:
    """sum_k C(n+alpha, n-k) (-x)**k / k!"""
    LaguerreParams(n, alpha)
    return Polynomial(
        Fraction((-1) ** k * comb(n + alpha, n - k), factorial(k)) for k in range(n + 1)
    )


def laguerre_identity_check(n: int) -> bool:
    if n < 1:
        raise ValueError("n must be >= 1")
    recursion = generate(psi(1), n)[n]
    closed = X * laguerre_poly(n - 1, 1).compose_scale(-1) / n
    return recursion == closed


def pi_n_poly(n: int) -> Polynomial:
    """prod_{k<n} ((x-1)/(k+1) + 1) - ((x-1)/(n+1) + 1)**n"""
    if n < 1:
        raise ValueError("n must be >= 1")
    prod = ONE
    for k in range(n):
        prod = prod * ((X - 1) / (k + 1) + 1)
    return prod - ((X - 1) / (n + 1) + 1) ** n


def laguerre_root_inequality(n: int, x) -> bool:
    """x^(n+1)/n^(n+1) L_{n-1}(-x)^(n+1)  >  x^n/(n+1)^n L_n(-x)^n, with alpha = 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    x = Fraction(x)
    lhs = (x / n) ** (n + 1) * laguerre_poly(n - 1, 1)(-x) ** (n + 1)
    rhs = (x / (n + 1)) ** n * laguerre_poly(n, 1)(-x) ** n
    return lhs > rhs
