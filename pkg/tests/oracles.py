"""Independent reference computations for the test suite.

Everything here works on plain lists of Fractions with naive textbook
algorithms (back substitution, convolution, forward elimination), on
purpose avoiding the library code paths they are used to check.
"""

from __future__ import annotations

import random
from fractions import Fraction

from riordan.series import Series


def frac(p, q=1) -> Fraction:
    return Fraction(p, q)


def coeffs(s: Series) -> list[Fraction]:
    return list(s.coefficients)


def convolve(a: list[Fraction], b: list[Fraction], upto: int) -> list[Fraction]:
    """Coefficients 0..upto of the product of two coefficient lists."""
    out = [Fraction(0)] * (upto + 1)
    for i, ai in enumerate(a):
        if i > upto or not ai:
            continue
        for j, bj in enumerate(b):
            if i + j > upto:
                break
            out[i + j] += ai * bj
    return out


def list_power(a: list[Fraction], k: int, upto: int) -> list[Fraction]:
    out = [Fraction(1)] + [Fraction(0)] * upto
    for _ in range(k):
        out = convolve(out, a, upto)
    return out


def divide(f: list[Fraction], g: list[Fraction], upto: int) -> list[Fraction]:
    """Coefficients 0..upto of f/g by back substitution (g[0] != 0)."""
    g0 = g[0]
    assert g0 != 0
    q: list[Fraction] = []
    for n in range(upto + 1):
        acc = f[n] if n < len(f) else Fraction(0)
        for i in range(n):
            gj = g[n - i] if n - i < len(g) else Fraction(0)
            acc -= q[i] * gj
        q.append(acc / g0)
    return q


def compositional_inverse(omega: list[Fraction], upto: int) -> list[Fraction]:
    """Coefficients 0..upto of the series y with omega(y) = x.

    Triangular solve, degree by degree: the x^n coefficient of omega(y)
    is omega[1]*y[n] plus terms that involve only y[1..n-1], because
    y**m has order m.
    """
    assert omega[0] == 0 and omega[1] != 0
    y = [Fraction(0), 1 / omega[1]]
    for n in range(2, upto + 1):
        y.append(Fraction(0))  # placeholder; contributes nothing below
        acc = Fraction(0)
        ym = y[:]  # y^1
        for m in range(2, n + 1):
            ym = convolve(ym, y, n)
            wm = omega[m] if m < len(omega) else Fraction(0)
            if wm:
                acc += wm * ym[n]
        y[n] = -acc / omega[1]
    return y[: upto + 1]


def invert_lower_triangular(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Exact inverse of a lower-triangular matrix by forward substitution."""
    n = len(rows)
    inv = [[Fraction(0)] * (i + 1) for i in range(n)]
    for j in range(n):
        inv[j][j] = 1 / rows[j][j]
        for i in range(j + 1, n):
            acc = Fraction(0)
            for k in range(j, i):
                acc += rows[i][k] * inv[k][j]
            inv[i][j] = -acc / rows[i][i]
    return inv


def matmul_lower(a: list[list[Fraction]], b: list[list[Fraction]]) -> list[list[Fraction]]:
    """Product of two lower-triangular matrices given as ragged rows."""
    n = len(a)
    out = [[Fraction(0)] * (i + 1) for i in range(n)]
    for i in range(n):
        for j in range(i + 1):
            acc = Fraction(0)
            for k in range(j, i + 1):
                acc += a[i][k] * b[k][j]
            out[i][j] = acc
    return out


# ----------------------------------------------------------------------
# random data panels (always seeded by the caller)
# ----------------------------------------------------------------------

def random_fraction(rng: random.Random, lo=-4, hi=4, maxden=3, nonzero=False) -> Fraction:
    while True:
        value = Fraction(rng.randint(lo, hi), rng.randint(1, maxden))
        if value or not nonzero:
            return value


def random_series(rng: random.Random, precision: int, nonzero_constant=False) -> Series:
    values = [random_fraction(rng, nonzero=(nonzero_constant and i == 0))
              for i in range(precision + 1)]
    return Series(values)


def random_order_one(rng: random.Random, precision: int) -> Series:
    """A random series with order exactly 1 (zero constant, nonzero x term)."""
    values = [Fraction(0), random_fraction(rng, nonzero=True)]
    values += [random_fraction(rng) for _ in range(precision - 1)]
    return Series(values)
