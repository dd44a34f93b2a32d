"""Difference polynomials Delta_n = P_n**(n+1) - P_{n+1}**n and their real zeros.

Delta_n has degree n(n+1), so expanding it is only worthwhile for modest n.
Everything that decides a sign or counts roots here works on the factors
instead: with A_n = n! P_n (integer coefficients), any positive rescaling of

    (n+1)**n * A_n(t)**(n+1)  -  n! * A_{n+1}(t)**n

has the sign of Delta_n(t).  Applying the same substitution (a shift or an
interval Moebius map) to A_n and A_{n+1} before taking powers produces the
transformed Delta_n exactly, so Descartes' rule of signs can be applied
without ever materializing Delta_n itself.

Root counts use the Vincent-Collins-Akritas bisection: the number of sign
variations of (1+x)**d * f(lo + (hi-lo)/(1+x)) bounds the number of roots
in (lo, hi) and equals it when it is 0 or 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import List, Optional, Sequence, Tuple

from sunroots import _intpoly
from sunroots.darcais import ArithFn, PolySequence, generate
from sunroots.exact_core import Polynomial, squarefree_part

DEFAULT_WIDTH = Fraction(1, 10**6)
# bisection depth after which repeated roots are suspected
_MAX_DEPTH = 160


class IsolationError(RuntimeError):
    pass


class _Stuck(Exception):
    pass


@dataclass(frozen=True)
class IsolatingInterval:
    """Rational interval holding exactly one real root, or an exact root."""

    lo: Fraction
    hi: Fraction
    exact: Optional[Fraction] = None
    sign_lo: int = 0
    sign_hi: int = 0

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("lo > hi")
        if self.exact is not None:
            if not self.lo == self.hi == self.exact:
                raise ValueError("exact root needs lo == hi == exact")
        elif self.sign_lo * self.sign_hi >= 0:
            raise ValueError("endpoint signs must differ for an isolating interval")

    @classmethod
    def at(cls, root: Fraction) -> "IsolatingInterval":
        root = Fraction(root)
        return cls(root, root, root)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        if self.exact is not None:
            return x == self.exact
        return self.lo < x < self.hi

    def __float__(self) -> float:
        return float(self.midpoint)


class CertificateMethod(str, enum.Enum):
    SHIFTED = "shifted-nonnegative-coefficients"
    ROOT_COUNT = "zero-root-count"


@dataclass
class RayPositivityCertificate:
    """Evidence that Delta_n(x) > 0 for every x > threshold, or a refutation.

    ``witness`` is a positive multiple of the coefficient list of
    Delta_n(x + threshold) for the shifted method, and the list of
    ``(lo, hi, sign_variations)`` boxes inspected for the root-count method
    (the last entry is the ray ``(bound, None, 0)``).
    """

    n: int
    threshold: Fraction
    method: CertificateMethod
    valid: bool
    witness: tuple = ()
    refutation: Optional[IsolatingInterval] = None


# ---------------------------------------------------------------------------
# root counting back-ends


class _PolyCounter:
    """Counts and signs for an integer polynomial held in expanded form."""

    def __init__(self, coeffs: Sequence[int]):
        self.c = list(coeffs)

    def count(self, lo: Fraction, hi: Fraction) -> int:
        t = _intpoly.interval_transform(self.c, lo, hi)
        return _intpoly.sign_variations(_intpoly.strip_low_zeros(_intpoly.strip(t)))

    def shifted(self, a: Fraction) -> List[int]:
        return _intpoly.shift_rational(self.c, a)

    def count_above(self, a: Fraction) -> int:
        return _intpoly.sign_variations(_intpoly.strip_low_zeros(self.shifted(a)))

    def sign(self, x: Fraction) -> int:
        return _intpoly.sign_at(self.c, x)


class _DeltaCounter(_PolyCounter):
    """Counts and signs for Delta_n, working on the factors A_n and A_{n+1}."""

    def __init__(self, seq: PolySequence, n: int):
        _require(seq, n)
        self.n = n
        self.a = list(seq.scaled[n])
        self.b = list(seq.scaled[n + 1])
        self.wa = (n + 1) ** n
        self.wb = factorial(n)

    def _combine(self, ta: Sequence[int], tb: Sequence[int]) -> List[int]:
        n = self.n
        return _intpoly.sub(
            _intpoly.scale(_intpoly.power(ta, n + 1), self.wa),
            _intpoly.scale(_intpoly.power(tb, n), self.wb),
        )

    def count(self, lo: Fraction, hi: Fraction) -> int:
        t = self._combine(
            _intpoly.interval_transform(self.a, lo, hi),
            _intpoly.interval_transform(self.b, lo, hi),
        )
        return _intpoly.sign_variations(_intpoly.strip_low_zeros(t))

    def shifted(self, a: Fraction) -> List[int]:
        return self._combine(
            _intpoly.shift_rational(self.a, a), _intpoly.shift_rational(self.b, a)
        )

    def sign(self, x: Fraction) -> int:
        p, q = x.numerator, x.denominator
        va = _intpoly.evaluate(self.a, p, q)
        vb = _intpoly.evaluate(self.b, p, q)
        d = self.wa * va ** (self.n + 1) - self.wb * vb**self.n
        return (d > 0) - (d < 0)


def _require(seq: PolySequence, n: int) -> None:
    if n < 1:
        raise ValueError(f"Delta_n needs n >= 1, got {n}")
    if n + 1 > seq.N:
        raise ValueError(f"Delta_{n} needs P_{n + 1}; sequence only has N = {seq.N}")


# ---------------------------------------------------------------------------
# bisection


def _refine(counter, lo: Fraction, hi: Fraction, width: Fraction) -> IsolatingInterval:
    """Shrink an interval holding exactly one simple root to ``width``."""
    s_lo, s_hi = counter.sign(lo), counter.sign(hi)
    while True:
        if s_lo and s_hi and hi - lo <= width:
            return IsolatingInterval(lo, hi, None, s_lo, s_hi)
        m = (lo + hi) / 2
        s = counter.sign(m)
        if s == 0:
            return IsolatingInterval.at(m)
        if s_hi:
            right = s == -s_hi
        elif s_lo:
            right = s == s_lo
        else:
            right = counter.count(m, hi) > 0
        if right:
            lo, s_lo = m, s
        else:
            hi, s_hi = m, s


def _rightmost_root(counter, lo, hi, width, trace=None, depth=0) -> Optional[IsolatingInterval]:
    """Largest root in the open interval (lo, hi), or None if there is none."""
    c = counter.count(lo, hi)
    if trace is not None:
        trace.append((lo, hi, c))
    if c == 0:
        return None
    if c == 1:
        return _refine(counter, lo, hi, width)
    if depth > _MAX_DEPTH:
        raise _Stuck()
    m = (lo + hi) / 2
    found = _rightmost_root(counter, m, hi, width, trace, depth + 1)
    if found is not None:
        return found
    if counter.sign(m) == 0:
        return IsolatingInterval.at(m)
    return _rightmost_root(counter, lo, m, width, trace, depth + 1)


def _all_roots(counter, lo, hi, width, out, depth=0) -> None:
    c = counter.count(lo, hi)
    if c == 0:
        return
    if c == 1:
        out.append(_refine(counter, lo, hi, width))
        return
    if depth > _MAX_DEPTH:
        raise _Stuck()
    m = (lo + hi) / 2
    _all_roots(counter, lo, m, width, out, depth + 1)
    if counter.sign(m) == 0:
        out.append(IsolatingInterval.at(m))
    _all_roots(counter, m, hi, width, out, depth + 1)


def _ray_bound(counter, start: Fraction, trace=None) -> Tuple[Fraction, bool]:
    """Smallest ``start * 2**k`` with no roots above it; flag if it is a root."""
    bound = Fraction(start)
    while True:
        if counter.count_above(bound) == 0:
            if trace is not None:
                trace.append((bound, None, 0))
            return bound, counter.sign(bound) == 0
        bound *= 2


def _next_power_of_two(x: Fraction) -> Fraction:
    b = Fraction(1)
    while b < x:
        b *= 2
    while b / 2 >= x and b > 1:
        b /= 2
    return b


def cauchy_bound(coeffs: Sequence[int]) -> Fraction:
    lead = abs(coeffs[-1])
    return 1 + max((Fraction(abs(c), lead) for c in coeffs[:-1]), default=Fraction(0))


# ---------------------------------------------------------------------------
# public operations


@dataclass
class DeltaPolynomial:
    """Expanded Delta_n = scaled / den, with ``scaled`` an integer polynomial."""

    n: int
    g: ArithFn
    scaled: Tuple[int, ...]
    den: int
    _poly: Optional[Polynomial] = field(default=None, repr=False, compare=False)

    @property
    def degree(self) -> int:
        return len(self.scaled) - 1

    @property
    def poly(self) -> Polynomial:
        if self._poly is None:
            self._poly = Polynomial.from_integer(self.scaled, self.den)
        return self._poly

    @property
    def leading(self) -> Fraction:
        return Fraction(self.scaled[-1], self.den)

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        num = _intpoly.evaluate(self.scaled, x.numerator, x.denominator)
        return Fraction(num, self.den * x.denominator**self.degree)


def build_delta(seq: PolySequence, n: int) -> DeltaPolynomial:
    _require(seq, n)
    counter = _DeltaCounter(seq, n)
    scaled = counter._combine(counter.a, counter.b)
    den = factorial(n) ** (n + 1) * (n + 1) ** n
    return DeltaPolynomial(n, seq.g, tuple(scaled), den)


def delta_sign_at(seq: PolySequence, n: int, x) -> int:
    """Sign of Delta_n(x), from exact values of P_n(x) and P_{n+1}(x)."""
    return _DeltaCounter(seq, n).sign(Fraction(x))


def isolate_real_roots(p: Polynomial, width: Optional[Fraction] = DEFAULT_WIDTH) -> List[IsolatingInterval]:
    """Isolating intervals for every distinct real root of ``p``, ascending.

    Works on the square-free part.  Intervals are refined to ``width``
    (pass ``None`` to stop at isolation); dyadic rational roots met on the
    way are reported exactly.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no isolated roots")
    sq = squarefree_part(p)
    if sq.degree < 1:
        return []
    ints = _intpoly.primitive(sq.integer_form()[1])
    counter = _PolyCounter(ints)
    bound = _next_power_of_two(cauchy_bound(ints))
    limit = Fraction(bound) if width is None else Fraction(width)
    out: List[IsolatingInterval] = []
    _all_roots(counter, -bound, bound, limit, out)
    return sorted(out, key=lambda r: r.lo)


def largest_real_zero(seq: PolySequence, n: int, width: Fraction = DEFAULT_WIDTH) -> IsolatingInterval:
    """Certified enclosure of the largest real zero of Delta_n.

    Delta_n(0) = 0, so the answer is at least 0.  The search never expands
    Delta_n unless a repeated root forces a square-free reduction.
    """
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    counter = _DeltaCounter(seq, n)
    try:
        return _largest_nonnegative(counter, width)
    except _Stuck:
        pass
    delta = build_delta(seq, n)
    sq = squarefree_part(delta.poly)
    counter = _PolyCounter(_intpoly.primitive(sq.integer_form()[1]))
    try:
        return _largest_nonnegative(counter, width)
    except _Stuck:  # pragma: no cover - square-free input always separates
        raise IsolationError(f"could not isolate the largest zero of Delta_{n}") from None


def _largest_nonnegative(counter, width: Fraction) -> IsolatingInterval:
    bound, is_root = _ray_bound(counter, Fraction(1))
    if is_root:
        return IsolatingInterval.at(bound)
    found = _rightmost_root(counter, Fraction(0), bound, width)
    return found if found is not None else IsolatingInterval.at(Fraction(0))


def verify_positive_beyond(seq: PolySequence, n: int, a) -> RayPositivityCertificate:
    """Prove Delta_n(x) > 0 for all x > a, or exhibit a root above a."""
    a = Fraction(a)
    counter = _DeltaCounter(seq, n)
    shifted = counter.shifted(a)
    if shifted and shifted[-1] > 0 and all(c >= 0 for c in shifted):
        return RayPositivityCertificate(n, a, CertificateMethod.SHIFTED, True, tuple(shifted))
    trace: list = []
    start = max(Fraction(1), 2 * a) if a > 0 else Fraction(1)
    try:
        bound, is_root = _ray_bound(counter, start, trace)
        if is_root:
            refutation = IsolatingInterval.at(bound)
        else:
            refutation = _rightmost_root(counter, a, bound, DEFAULT_WIDTH, trace)
            if refutation is None and a < bound and counter.sign(bound) == 0:
                refutation = IsolatingInterval.at(bound)
    except _Stuck:
        roots = isolate_real_roots(build_delta(seq, n).poly)
        above = [r for r in roots if r.hi > a and (r.exact is None or r.exact > a)]
        refutation = above[-1] if above else None
    return RayPositivityCertificate(
        n, a, CertificateMethod.ROOT_COUNT, refutation is None, tuple(trace), refutation
    )


def check_certificate(cert: RayPositivityCertificate, seq: PolySequence) -> bool:
    """Re-derive a certificate's claim from the expanded Delta_n.

    For the shifted method the expanded polynomial is shifted with
    rational arithmetic and compared against the witness up to a positive
    factor; for the root-count method the expanded polynomial's roots are
    isolated from scratch and none may exceed the threshold.
    """
    delta = build_delta(seq, cert.n).poly
    if cert.method is CertificateMethod.SHIFTED:
        shifted = delta.shift(cert.threshold)
        w = cert.witness
        if len(w) != len(shifted) or not all(c >= 0 for c in w) or w[-1] <= 0:
            return False
        ratio = shifted.leading / w[-1]
        return ratio > 0 and all(s == ratio * c for s, c in zip(shifted.coefficients, w))
    roots = isolate_real_roots(delta)
    beyond = [r for r in roots if (r.exact if r.exact is not None else r.hi) > cert.threshold]
    if cert.valid:
        return not beyond
    return bool(beyond)


def closed_delta1(g: ArithFn) -> Polynomial:
    """(x/2)(x - g(2))."""
    return Polynomial((0, Fraction(-g(2), 2), Fraction(1, 2)))


def closed_delta2(g: ArithFn) -> Polynomial:
    """(x**2/72)(7x^4 + 15 g2 x^3 + (9 g2^2 - 8 g3) x^2 + (9 g2^3 - 24 g3 g2) x - 8 g3^2)."""
    g2, g3 = g(2), g(3)
    q = (-8 * g3 * g3, 9 * g2**3 - 24 * g3 * g2, 9 * g2 * g2 - 8 * g3, 15 * g2, 7)
    return Polynomial((0, 0) + tuple(Fraction(c, 72) for c in q))


def delta2_criterion(g: ArithFn) -> bool:
    """Delta_2 >= 0 on [g(2), oo) exactly when g(3) <= g(2)**2."""
    return g(3) <= g(2) ** 2


def delta2_lemma_agreement(g: ArithFn) -> Tuple[bool, bool]:
    """Return ``(criterion, observed)`` where *observed* is decided from Delta_2 itself."""
    seq = generate(g, 3)
    g2 = Fraction(g(2))
    cert = verify_positive_beyond(seq, 2, g2)
    observed = cert.valid and delta_sign_at(seq, 2, g2) >= 0
    return delta2_criterion(g), observed

