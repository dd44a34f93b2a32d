"""Counting sequences and exact root/quotient monotonicity checks.

Every comparison between n-th roots is done by cross-multiplying into
integer powers; decimals only appear in :func:`display_root`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from typing import Callable, List, Optional, Sequence, Tuple

from sunroots.arith_functions import gbar, gell, sigma

ArithFn = Callable[[int], int]


@dataclass(frozen=True)
class IntegerSequence:
    name: str
    values: Tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    @property
    def N(self) -> int:
        return len(self.values) - 1


def wohlfahrt_sequence(g: ArithFn, N: int, scale: int = 1, name: Optional[str] = None) -> IntegerSequence:
    """a(0) = 1, a(n) = (1/n) sum_{k<=n} scale*g(k) a(n-k).

    Raises ArithmeticError if some a(n) is not an integer.
    """
    if N < 0:
        raise ValueError("N must be non-negative")
    gv = [0] + [scale * g(k) for k in range(1, N + 1)]
    a = [1]
    for n in range(1, N + 1):
        total = sum(gv[k] * a[n - k] for k in range(1, n + 1))
        q, r = divmod(total, n)
        if r:
            raise ArithmeticError(f"non-integral term at n={n}: {total}/{n}")
        a.append(q)
    if name is None:
        name = f"wohlfahrt[{scale}*{g}]" if scale != 1 else f"wohlfahrt[{g}]"
    return IntegerSequence(name, tuple(a))


def partitions(N: int) -> IntegerSequence:
    return wohlfahrt_sequence(sigma(1), N, name="p")


def colored_partitions(k: int, N: int) -> IntegerSequence:
    if k < 1:
        raise ValueError("k must be >= 1")
    return wohlfahrt_sequence(sigma(1), N, scale=k, name=f"pk:{k}")


def plane_partitions(N: int) -> IntegerSequence:
    return wohlfahrt_sequence(sigma(2), N, name="pp")


def overpartitions(N: int) -> IntegerSequence:
    # P_n^gbar(2): the recursion with x = 2 folded into g
    return wohlfahrt_sequence(gbar(), N, scale=2, name="pbar")


def nell_sequence(ell: int, N: int) -> IntegerSequence:
    return wohlfahrt_sequence(gell(ell), N, name=f"Nell:{ell}")


def by_name(name: str, N: int) -> IntegerSequence:
    """``p``, ``pk:<k>``, ``pp``, ``pbar`` or ``Nell:<l>``."""
    head, _, tail = name.partition(":")
    if name == "p":
        return partitions(N)
    if name == "pp":
        return plane_partitions(N)
    if name == "pbar":
        return overpartitions(N)
    if head in ("pk", "Nell") and tail.isdigit():
        k = int(tail)
        if head == "pk":
            return colored_partitions(k, N)
        if k < 1:
            raise ValueError("Nell needs l >= 1")
        return nell_sequence(k, N)
    raise ValueError(f"unknown sequence {name!r}")


# ---------------------------------------------------------------------------
# comparisons


def root_compare(seq: Sequence[int], n: int) -> int:
    """Sign of a(n)**(n+1) - a(n+1)**n, i.e. of R(n) - R(n+1)."""
    lhs = seq[n] ** (n + 1)
    rhs = seq[n + 1] ** n
    return (lhs > rhs) - (lhs < rhs)


def root_decreasing_check(seq: Sequence[int], n: int) -> bool:
    if n < 1:
        raise ValueError("n must be >= 1")
    return root_compare(seq, n) > 0


def is_logconcave_at(seq: Sequence[int], n: int) -> bool:
    return seq[n] ** 2 >= seq[n - 1] * seq[n + 1]


def log_concavity_scan(seq: Sequence[int], start: int, stop: int) -> List[int]:
    """Indices n in [start, stop] with a(n)**2 < a(n-1) a(n+1)."""
    if start < 1 or stop + 1 >= len(seq):
        raise ValueError(f"scan range [{start}, {stop}] needs values 0..{stop + 1}")
    return [n for n in range(start, stop + 1) if not is_logconcave_at(seq, n)]


def equivalence_property(seq: Sequence[int], n: int) -> bool:
    """R(n) > Q(n)  <=>  R(n-1) > R(n)  <=>  R(n-1) > Q(n).

    Each comparison is cleared of roots separately: raising the first to
    the n-th power, the second to the n(n-1)-th, the third to the
    (n-1)-th.  For n = 1 the R(0) comparisons reduce to these integer
    forms with exponent 0.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    a, b = seq[n], seq[n - 1]
    # R(n) > Q(n): a > (a/b)**n  <=>  a * b**n > a**n
    first = a * b**n > a**n
    # R(n-1) > R(n): b**(1/(n-1)) > a**(1/n)  <=>  b**n > a**(n-1)
    second = b**n > a ** (n - 1)
    # R(n-1) > Q(n): b**(1/(n-1)) > a/b  <=>  b * b**(n-1) > a**(n-1)
    third = b * b ** (n - 1) > a ** (n - 1)
    return first == second == third


def display_root(value: int, n: int, decimals: int) -> str:
    """value**(1/n) rounded to a fixed number of decimals."""
    if n == 0:
        raise ValueError("the 0-th root is undefined")
    with localcontext() as ctx:
        ctx.prec = max(40, decimals + 20)
        root = Decimal(value) ** (Decimal(1) / Decimal(n))
        return str(root.quantize(Decimal(1).scaleb(-decimals), rounding=ROUND_HALF_EVEN))


@dataclass(frozen=True)
class RootQuotientReport:
    n: int
    root_decreasing: bool
    logconcave: bool
    display_root: str


def root_quotient_report(seq: Sequence[int], n: int, decimals: int = 3) -> RootQuotientReport:
    return RootQuotientReport(
        n,
        root_decreasing_check(seq, n),
        is_logconcave_at(seq, n),
        display_root(seq[n], n, decimals),
    )


@dataclass
class MonotoneRootReport:
    """Outcome of the log-concavity-plus-initial-condition argument."""

    n0: int
    horizon: int
    logconcave_failures: List[int]
    initial_condition: bool
    induction_holds: bool
    direct_failures: List[int]
    agree: bool
    decreasing_from: Optional[int]
    equalities: List[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.induction_holds and not self.direct_failures and self.agree

    @property
    def failures(self) -> List[str]:
        out = []
        if self.logconcave_failures:
            out.append(f"not log-concave at {self.logconcave_failures[:10]}")
        if not self.initial_condition:
            out.append(f"initial condition R({self.n0 - 1}) > R({self.n0}) fails")
        return out


def monotone_root_verify(seq: Sequence[int], n0: int, horizon: int) -> MonotoneRootReport:
    """Check that the n-th roots decrease strictly on [n0 - 1, horizon].

    Route one: log-concavity on [n0, horizon - 1] plus R(n0-1) > R(n0)
    implies the claim by induction.  Route two compares R(n) with R(n+1)
    directly for every n in range.  ``decreasing_from`` is the least m >= 1
    such that the direct comparison holds on all of [m, horizon - 1].
    """
    if n0 < 2 or horizon <= n0 or horizon >= len(seq):
        raise ValueError(f"need 2 <= n0 < horizon < {len(seq)}")
    lc_fail = log_concavity_scan(seq, n0, horizon - 1)
    initial = root_decreasing_check(seq, n0 - 1)
    induction = initial and not lc_fail
    cmp = {n: root_compare(seq, n) for n in range(1, horizon)}
    direct_fail = [n for n in range(n0 - 1, horizon) if cmp[n] <= 0]
    m = horizon
    while m > 1 and cmp[m - 1] > 0:
        m -= 1
    return MonotoneRootReport(
        n0=n0,
        horizon=horizon,
        logconcave_failures=lc_fail,
        initial_condition=initial,
        induction_holds=induction,
        direct_failures=direct_fail,
        agree=not induction or not direct_fail,
        decreasing_from=m if m < horizon else None,
        equalities=[n for n in range(1, horizon) if cmp[n] == 0],
    )
