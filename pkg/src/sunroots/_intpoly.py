"""Dense integer polynomial kernel.

Polynomials are plain lists of ``int`` in ascending degree order.  Large
products go through Kronecker substitution on top of GMP (``gmpy2.mpz``),
which turns a polynomial product into a single big-integer product.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

import gmpy2
from gmpy2 import mpz

IntPoly = List[int]

# below this many coefficient-multiplications schoolbook wins
_SCHOOLBOOK_WORK = 400
_SHIFT_SPLIT = 64


def strip(c: Sequence[int]) -> IntPoly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def add(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return strip(out)


def sub(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, v in enumerate(b):
        out[i] -= v
    return strip(out)


def scale(a: Sequence[int], s: int) -> IntPoly:
    if s == 0:
        return []
    return [s * v for v in a]


def max_bits(a: Sequence[int]) -> int:
    return max((abs(v).bit_length() for v in a), default=0)


def _pack(c: Sequence[int], k: int) -> mpz:
    if len(c) == 1:
        return mpz(c[0])
    m = len(c) // 2
    return _pack(c[:m], k) + (_pack(c[m:], k) << (k * m))


def _unpack(n: mpz, k: int, length: int, out: IntPoly) -> None:
    # signed digits in base 2**k, each digit in [-2**(k-1), 2**(k-1))
    if length == 1:
        out.append(int(n))
        return
    m = length // 2
    w = k * m
    lo = gmpy2.f_mod_2exp(n, w)
    if gmpy2.bit_test(lo, w - 1):
        lo -= mpz(1) << w
    _unpack(lo, k, m, out)
    _unpack((n - lo) >> w, k, length - m, out)


def _schoolbook(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def mul(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    """Exact product of two integer polynomials."""
    if not a or not b:
        return []
    if len(a) * len(b) <= _SCHOOLBOOK_WORK:
        return strip(_schoolbook(a, b))
    # |coeff of product| < min(len) * max|a| * max|b|; one extra bit for sign
    bound = max_bits(a) + max_bits(b) + min(len(a), len(b)).bit_length()
    k = bound + 1
    if a is b:
        prod = _pack(a, k) ** 2
    else:
        prod = _pack(a, k) * _pack(b, k)
    out: IntPoly = []
    _unpack(prod, k, len(a) + len(b) - 1, out)
    return strip(out)


def power(a: Sequence[int], e: int) -> IntPoly:
    if e < 0:
        raise ValueError("negative exponent")
    result: IntPoly = [1]
    base = list(a)
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def evaluate(c: Sequence[int], u: int, v: int = 1) -> int:
    """Return ``v**d * c(u/v)`` for ``d = len(c) - 1``, computed in integers."""
    d = len(c) - 1
    if d < 0:
        return 0
    acc = c[d]
    vpow = 1
    for i in range(d - 1, -1, -1):
        vpow *= v
        acc = acc * u + c[i] * vpow
    return acc


def sign_at(c: Sequence[int], x: Fraction) -> int:
    """Sign of ``c(x)``; the positive scale ``den**d`` does not affect it."""
    val = evaluate(c, x.numerator, x.denominator)
    return (val > 0) - (val < 0)


def _shift_small(c: Sequence[int], t: int) -> IntPoly:
    out = list(c)
    n = len(out)
    if t == 0:
        return out
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] += t * out[j + 1]
    return out


def taylor_shift(c: Sequence[int], t: int) -> IntPoly:
    """Return the integer polynomial ``c(x + t)``."""
    if t == 0 or len(c) <= 1:
        return list(c)
    if len(c) <= _SHIFT_SPLIT:
        return _shift_small(c, t)
    # c = lo + x**m * hi  =>  c(x+t) = lo(x+t) + (x+t)**m * hi(x+t)
    m = len(c) // 2
    lo = taylor_shift(c[:m], t)
    hi = taylor_shift(c[m:], t)
    return add(lo, mul(power([t, 1], m), hi))


def shift_rational(c: Sequence[int], t: Fraction) -> IntPoly:
    """Return ``q**d * c(x + p/q)`` for ``t = p/q``; an integer polynomial."""
    d = len(c) - 1
    if d <= 0:
        return list(c)
    p, q = t.numerator, t.denominator
    if q == 1:
        return taylor_shift(c, p)
    # y = q x:  q**d c(y/q) has coefficients c_i q**(d-i); shift by p; rescale
    scaled = [ci * q ** (d - i) for i, ci in enumerate(c)]
    shifted = taylor_shift(scaled, p)
    return [ci * q**i for i, ci in enumerate(shifted)]


def scale_arg(c: Sequence[int], s: int) -> IntPoly:
    """Return ``c(s x)``."""
    out = []
    sp = 1
    for ci in c:
        out.append(ci * sp)
        sp *= s
    return out


def interval_transform(c: Sequence[int], lo: Fraction, hi: Fraction) -> IntPoly:
    """Map the roots of ``c`` in ``(lo, hi)`` onto the positive half-line.

    Returns a positive multiple of ``(1+x)**d * c(lo + (hi-lo)/(1+x))``,
    the common denominator of ``lo`` and ``hi`` cleared.  Only the
    *same* positive multiple is applied to every polynomial of a given
    degree and interval, which lets callers combine transformed factors.
    """
    d = len(c) - 1
    if d <= 0:
        return list(c)
    w = lo.denominator * hi.denominator // gmpy2.gcd(lo.denominator, hi.denominator)
    w = int(w)
    u = lo.numerator * (w // lo.denominator)
    s = hi.numerator * (w // hi.denominator) - u
    # w**d c((u + s y)/w) = sum c_i w**(d-i) (u + s y)**i
    scaled = [ci * w ** (d - i) for i, ci in enumerate(c)]
    q = scale_arg(taylor_shift(scaled, u), s)
    q.reverse()
    return taylor_shift(q, 1)


def sign_variations(c: Sequence[int]) -> int:
    count = 0
    prev = 0
    for v in c:
        if v:
            if prev and (v > 0) != (prev > 0):
                count += 1
            prev = v
    return count


def strip_low_zeros(c: Sequence[int]) -> IntPoly:
    i = 0
    while i < len(c) and c[i] == 0:
        i += 1
    return list(c[i:])


def content(c: Sequence[int]) -> int:
    g = 0
    for v in c:
        g = gmpy2.gcd(g, v)
        if g == 1:
            break
    return int(g)


def primitive(c: Sequence[int]) -> IntPoly:
    """Divide out the content and make the leading coefficient positive."""
    c = strip(c)
    if not c:
        return []
    g = content(c)
    if c[-1] < 0:
        g = -g
    return [v // g for v in c]
