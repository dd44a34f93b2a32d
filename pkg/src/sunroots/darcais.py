"""Generalized D'Arcais polynomials P_n^g and the hook-length oracle.

The sequence is defined by P_0 = 1 and

    P_n(x) = (x/n) * sum_{k=1..n} g(k) P_{n-k}(x).

For integer-valued g the scaled polynomial A_n = n! * P_n has integer
coefficients, and dividing the recursion through by (n-1)! gives

    A_n(x) = x * sum_{k=1..n} g(k) * (n-1)!/(n-k)! * A_{n-k}(x),

which is what :func:`generate` runs.  Rational coefficients are exposed
through :class:`PolySequence` indexing.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Dict, Iterator, List, Tuple

from sunroots import _intpoly
from sunroots.exact_core import Polynomial

ArithFn = Callable[[int], int]

PARTITION_LIMIT = 40
ORACLE_LIMIT = 15


def _int_value(g: ArithFn, k: int) -> int:
    v = g(k)
    if isinstance(v, Fraction):
        if v.denominator != 1:
            raise TypeError(f"g({k}) = {v} is not an integer")
        v = v.numerator
    if not isinstance(v, int):
        raise TypeError(f"g({k}) must be an integer, got {type(v).__name__}")
    return v


@dataclass
class PolySequence:
    """P_0, ..., P_N for a fixed g, stored as scaled integer polynomials."""

    g: ArithFn
    scaled: Tuple[Tuple[int, ...], ...]
    _cache: Dict[int, Polynomial] = field(default_factory=dict, repr=False, compare=False)

    @property
    def N(self) -> int:
        return len(self.scaled) - 1

    def __len__(self) -> int:
        return len(self.scaled)

    def __getitem__(self, n: int) -> Polynomial:
        if not 0 <= n <= self.N:
            raise IndexError(f"P_{n} not generated (N = {self.N})")
        p = self._cache.get(n)
        if p is None:
            p = Polynomial.from_integer(self.scaled[n], factorial(n))
            self._cache[n] = p
        return p

    def __iter__(self) -> Iterator[Polynomial]:
        return (self[n] for n in range(len(self)))

    @property
    def polys(self) -> List[Polynomial]:
        return list(self)

    def value(self, n: int, x) -> Fraction:
        """Exact P_n(x) without building the rational polynomial."""
        x = Fraction(x)
        c = self.scaled[n]
        num = _intpoly.evaluate(c, x.numerator, x.denominator)
        return Fraction(num, factorial(n) * x.denominator ** (len(c) - 1))


def generate(g: ArithFn, N: int) -> PolySequence:
    if N < 0:
        raise ValueError(f"N must be non-negative, got {N}")
    gv = [0] + [_int_value(g, k) for k in range(1, N + 1)]
    scaled: List[List[int]] = [[1]]
    for n in range(1, N + 1):
        acc = [0] * n
        ratio = 1  # (n-1)!/(n-k)!
        for k in range(1, n + 1):
            if k > 1:
                ratio *= n - k + 1
            c = gv[k] * ratio
            if c:
                for i, a in enumerate(scaled[n - k]):
                    acc[i] += c * a
        scaled.append([0] + acc)
    return PolySequence(g, tuple(tuple(c) for c in scaled))


def value_table(seq: PolySequence, x) -> List[Fraction]:
    return [seq.value(n, x) for n in range(len(seq))]


def enumerate_partitions(n: int) -> List[Tuple[int, ...]]:
    """All partitions of n in lexicographically decreasing order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > PARTITION_LIMIT:
        raise ValueError(f"partition enumeration is limited to n <= {PARTITION_LIMIT}")
    out: List[Tuple[int, ...]] = []

    def rec(remaining: int, cap: int, prefix: List[int]) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(remaining, cap), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(n, n, [])
    return out


def conjugate(partition: Tuple[int, ...]) -> Tuple[int, ...]:
    if not partition:
        return ()
    return tuple(sum(1 for part in partition if part > j) for j in range(partition[0]))


@dataclass(frozen=True)
class PartitionHookData:
    partition: Tuple[int, ...]
    hooks: Tuple[int, ...]

    def __post_init__(self):
        if len(self.hooks) != sum(self.partition):
            raise ValueError("one hook per cell expected")


def hook_lengths(partition: Tuple[int, ...]) -> Tuple[int, ...]:
    """Hook lengths of the Ferrers diagram, sorted in decreasing order."""
    partition = tuple(partition)
    if any(b > a for a, b in zip(partition, partition[1:])) or any(p <= 0 for p in partition):
        raise ValueError(f"not a partition: {partition}")
    cols = conjugate(partition)
    hooks = [
        (row - j - 1) + (cols[j] - i - 1) + 1
        for i, row in enumerate(partition)
        for j in range(row)
    ]
    return tuple(sorted(hooks, reverse=True))


def hook_data(partition: Tuple[int, ...]) -> PartitionHookData:
    return PartitionHookData(tuple(partition), hook_lengths(partition))


def nekrasov_okounkov_oracle(n: int) -> Polynomial:
    """Sum over partitions of n of prod_{h} (1 + (x-1)/h**2).

    Brute-force enumeration; it must agree with ``generate(sigma(1), n)[n]``.
    """
    if n > ORACLE_LIMIT:
        raise ValueError(f"hook oracle is limited to n <= {ORACLE_LIMIT}")
    total = Polynomial()
    for lam in enumerate_partitions(n):
        term = Polynomial.constant(1)
        for h, mult in Counter(hook_lengths(lam)).items():
            h2 = h * h
            factor = Polynomial((Fraction(h2 - 1, h2), Fraction(1, h2)))
            term = term * factor**mult
        total = total + term
    return total
