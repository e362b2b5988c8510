"""Exact integer building blocks shared by the closed formulas.

Everything here works on Python ints (arbitrary precision) or
:class:`fractions.Fraction`; nothing ever touches floating point.
"""
from fractions import Fraction
from functools import lru_cache
from math import comb
from math import factorial as _math_factorial

__all__ = [
    "binomial",
    "rising_factorial",
    "reciprocal_factorial",
    "factorial",
    "composition_count",
    "exact_div",
]


def binomial(a: int, b: int) -> int:
    """C(a, b), or 0 whenever the pair is outside 0 <= b <= a."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


@lru_cache(maxsize=4096)
def factorial(m: int) -> int:
    if m < 0:
        raise ValueError(f"factorial of negative integer {m}")
    return _math_factorial(m)


def rising_factorial(a: int, m: int) -> int:
    """Pochhammer symbol (a)_m = a (a+1) ... (a+m-1), with (a)_0 = 1."""
    if m < 0:
        raise ValueError("rising_factorial needs m >= 0")
    if m == 0:
        return 1
    top = a + m - 1
    if a <= 0 <= top:
        return 0
    if a > 0:
        return factorial(top) // factorial(a - 1)
    # every factor negative: (a)_m = (-1)^m (-top)_m
    val = factorial(-a) // factorial(-top - 1)
    return -val if m % 2 else val


def reciprocal_factorial(m: int) -> Fraction:
    """1/m! for m >= 0 and 0 for negative m (drops the whole term)."""
    if m < 0:
        return Fraction(0)
    return Fraction(1, factorial(m))


def exact_div(num: int, den: int) -> int:
    """Integer division that refuses to round."""
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"inexact division {num}/{den}")
    return q


def composition_count(n: int, k: int, variant: str = "positive") -> int:
    """Number of k-tuples summing to n.

    ``positive``: parts >= 1, sum == n.
    ``weak``: parts >= 0, sum == n.
    ``bounded``: parts >= 0, sum <= n.
    """
    if variant == "positive":
        if n == 0 and k == 0:
            return 1
        return binomial(n - 1, k - 1)
    if variant == "weak":
        if k == 0:
            return 1 if n == 0 else 0
        return binomial(n + k - 1, k - 1)
    if variant == "bounded":
        if n < 0:
            return 0
        return binomial(n + k, k)
    raise ValueError(f"unknown composition variant {variant!r}")
