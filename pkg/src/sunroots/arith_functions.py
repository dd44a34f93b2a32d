"""Normalized arithmetic functions g with g(1) = 1 and positive values.

Four families are supported:

* ``sigma:l``  divisor power sums, sum of d**l over d | n
* ``psi:l``    powers, n**l
* ``gbar``     sigma(n) - sigma(n/2), the overpartition weight
* ``gell:l``   number of index-n subgroups of Z**l, via
  g_l(n) = sum_{d | n} d * g_{l-1}(d) with g_0 the indicator of n = 1
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import List, Optional


def divisors(n: int) -> List[int]:
    if n < 1:
        raise ValueError(f"divisors need n >= 1, got {n}")
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"arithmetic functions are defined for n >= 1, got {n}")


@lru_cache(maxsize=None)
def eval_sigma(ell: int, n: int) -> int:
    _check_n(n)
    return sum(d**ell for d in divisors(n))


def eval_psi(ell: int, n: int) -> int:
    _check_n(n)
    return n**ell


def eval_gbar(n: int) -> int:
    _check_n(n)
    if n % 2:
        return eval_sigma(1, n)
    return eval_sigma(1, n) - eval_sigma(1, n // 2)


@lru_cache(maxsize=None)
def eval_gell(ell: int, n: int) -> int:
    if ell < 1:
        raise ValueError(f"gell needs l >= 1, got {ell}")
    _check_n(n)
    if ell == 1:
        return 1
    return sum(d * eval_gell(ell - 1, d) for d in divisors(n))


class Kind(str, enum.Enum):
    SIGMA = "sigma"
    PSI = "psi"
    GBAR = "gbar"
    GELL = "gell"


@dataclass(frozen=True)
class ArithFnSpec:
    """A named member of one of the supported families; call it like ``g(n)``."""

    kind: Kind
    ell: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.kind is Kind.GBAR:
            if self.ell is not None:
                raise ValueError("gbar takes no parameter")
            return
        if self.ell is None or not isinstance(self.ell, int):
            raise ValueError(f"{self.kind.value} needs an integer parameter")
        minimum = 1 if self.kind is Kind.GELL else 0
        if self.ell < minimum:
            raise ValueError(f"{self.kind.value} needs l >= {minimum}, got {self.ell}")

    def __call__(self, n: int) -> int:
        if self.kind is Kind.SIGMA:
            return eval_sigma(self.ell, n)
        if self.kind is Kind.PSI:
            return eval_psi(self.ell, n)
        if self.kind is Kind.GBAR:
            return eval_gbar(n)
        return eval_gell(self.ell, n)

    @property
    def name(self) -> str:
        if self.kind is Kind.GBAR:
            return "gbar"
        return f"{self.kind.value}:{self.ell}"

    def __str__(self) -> str:
        return self.name

    @classmethod
    def parse(cls, text: str) -> "ArithFnSpec":
        """Parse ``sigma:<l>``, ``psi:<l>``, ``gbar`` or ``gell:<l>``."""
        text = text.strip()
        head, sep, tail = text.partition(":")
        try:
            kind = Kind(head)
        except ValueError:
            raise ValueError(f"unknown arithmetic function {text!r}") from None
        if kind is Kind.GBAR:
            if sep:
                raise ValueError("gbar takes no parameter")
            return cls(kind)
        if not sep or not tail.isdigit():
            raise ValueError(f"{head} needs a decimal parameter, e.g. {head}:1")
        return cls(kind, int(tail))


def sigma(ell: int = 1) -> ArithFnSpec:
    return ArithFnSpec(Kind.SIGMA, ell)


def psi(ell: int) -> ArithFnSpec:
    return ArithFnSpec(Kind.PSI, ell)


def gbar() -> ArithFnSpec:
    return ArithFnSpec(Kind.GBAR)


def gell(ell: int) -> ArithFnSpec:
    return ArithFnSpec(Kind.GELL, ell)


REGISTERED = (sigma(1), sigma(2), psi(0), psi(1), psi(2), gbar(), gell(3), gell(4))
