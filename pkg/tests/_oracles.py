"""Independent reference computations used only by the tests.

These deliberately avoid the package's recursions: counting sequences
come from product generating functions, polynomials from exp-series
expansion.
"""

from fractions import Fraction
from math import factorial

from sunroots.exact_core import Polynomial


def series_mul(a, b, N):
    out = [0] * (N + 1)
    for i, x in enumerate(a[: N + 1]):
        if x:
            for j, y in enumerate(b[: N + 1 - i]):
                out[i + j] += x * y
    return out


def inverse_product(exponent, N):
    """Coefficients of prod_{m>=1} (1 - q^m)^(-exponent(m)) up to q^N."""
    out = [1] + [0] * N
    for m in range(1, N + 1):
        for _ in range(exponent(m)):
            # multiply by 1/(1 - q^m): running sum with stride m
            for i in range(m, N + 1):
                out[i] += out[i - m]
    return out


def partitions_pentagonal(N):
    p = [1] + [0] * N
    for n in range(1, N + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


def colored_product(k, N):
    return inverse_product(lambda m: k, N)


def plane_macmahon(N):
    return inverse_product(lambda m: m, N)


def overpartitions_product(N):
    # (1 + q^m) / (1 - q^m) = 1 + 2 sum_{j>=1} q^{jm}
    out = [1] + [0] * N
    for m in range(1, N + 1):
        factor = [1] + [0] * N
        for j in range(m, N + 1, m):
            factor[j] = 2
        out = series_mul(out, factor, N)
    return out


def exp_series_poly(g, n):
    """[t^n] exp(x * sum_k g(k) t^k / k) as a Polynomial in x."""
    s = [Fraction(0)] + [Fraction(g(k), k) for k in range(1, n + 1)]
    coeffs = [Fraction(0)] * (n + 1)
    power = [Fraction(1)] + [Fraction(0)] * n
    for m in range(n + 1):
        coeffs[m] = power[n] / factorial(m)
        power = series_mul(power, s, n)
    return Polynomial(coeffs)
