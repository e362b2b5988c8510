"""Closed-form Whitney numbers for fences, crowns and asymmetric peaks.

Notation: ``f(n, k)`` counts k-element order ideals of the fence Z_n,
``c(n, k)`` those of the crown on 2n elements.  Every routine returns 0 for
k outside the table instead of raising.
"""
from __future__ import annotations

from fractions import Fraction

from .poset import PosetError, WhitneyTable
from .primitives import binomial, exact_div, factorial, rising_factorial

__all__ = [
    "BINOMIAL_SUM",
    "HYPERGEOMETRIC",
    "fence_whitney_odd",
    "fence_whitney_even",
    "fence_whitney",
    "fence_peak_class_count",
    "fence_table",
    "crown_whitney",
    "crown_table",
    "crown_whitney_closed",
    "crown_closed_comparison",
    "ap_whitney",
    "ap_table",
]

BINOMIAL_SUM = "binomial_sum"
HYPERGEOMETRIC = "hypergeometric"
_VARIANTS = (BINOMIAL_SUM, HYPERGEOMETRIC)


def _check_variant(variant):
    if variant not in _VARIANTS:
        raise ValueError(f"unknown formula variant {variant!r}; use one of {_VARIANTS}")


def fence_whitney_odd(v: int, k: int, variant: str = HYPERGEOMETRIC) -> int:
    """f(2v+1, k)."""
    _check_variant(variant)
    if v < 0 or k < 0 or k > 2 * v + 1:
        return 0
    total = binomial(v + 1, k)
    if variant == BINOMIAL_SUM:
        for j in range(1, k // 2 + 1):
            for r in range(1, j + 1):
                total += (
                    binomial(j - 1, r - 1)
                    * binomial(v - j + 1, r)
                    * binomial(v + 1 - (j + r), k - (2 * j + r))
                )
        return total
    # summands with k-2j-1 < 0 carry 1/(negative)! and vanish; those with
    # j < k-v-1 vanish because their second rising factorial spans zero
    j0, j1 = max(1, k - v - 1), (k - 1) // 2
    if j0 > j1:
        return total
    term = _odd_term(v, k, j0)
    total += term
    for j in range(j0, j1):
        # consecutive summands differ by a ratio of small integers
        num = (k - 2 * j) * (k - 2 * j - 1) ** 2 * (k - 2 * j - 2)
        den = (k - j - 1) * (v - j + 1) * (v + j - k + 2) * (j + 1)
        term = exact_div(term * num, den)
        total += term
    return total


def _odd_term(v, k, j):
    if k - 2 * j - 1 < 0:
        return 0
    num = rising_factorial(k - 2 * j + 1, j - 1) * rising_factorial(v + j - k + 2, k - 2 * j)
    return exact_div(num, factorial(j) * factorial(k - 2 * j - 1))


def _even_term(v, k, j):
    if k - 2 * j < 0:
        return 0
    num = rising_factorial(k - 2 * j + 1, j) * rising_factorial(v + j - k + 1, k - 2 * j)
    return exact_div(num, factorial(j) * factorial(k - 2 * j))


def fence_whitney_even(v: int, k: int, variant: str = HYPERGEOMETRIC) -> int:
    """f(2v, k)."""
    _check_variant(variant)
    if v < 0 or k < 0 or k > 2 * v:
        return 0
    total = 0
    if variant == BINOMIAL_SUM:
        for j in range(0, k // 2 + 1):
            for r in range(0, j + 1):
                total += (
                    binomial(j, r)
                    * binomial(v - j, r)
                    * binomial(v - (j + r), k - (2 * j + r))
                )
        return total
    j0, j1 = max(0, k - v), k // 2
    if j0 > j1:
        return 0
    term = _even_term(v, k, j0)
    total = term
    for j in range(j0, j1):
        num = (k - 2 * j) ** 2 * (k - 2 * j - 1) ** 2
        den = (k - j) * (v - j) * (v + j - k + 1) * (j + 1)
        term = exact_div(term * num, den)
        total += term
    return total


def fence_whitney(n: int, k: int, variant: str = HYPERGEOMETRIC) -> int:
    """f(n, k) for any integers, dispatching on the parity of n."""
    if n < 0 or k < 0 or k > n:
        return 0
    if n % 2:
        return fence_whitney_odd(n // 2, k, variant)
    return fence_whitney_even(n // 2, k, variant)


def fence_peak_class_count(v: int, k: int, j: int) -> int:
    """Ideals of Z_{2v+1} of size k holding exactly j maximal (rank-1) elements."""
    if v < 0 or k < 0 or j < 0 or k > 2 * v + 1:
        return 0
    if j == 0:
        # rank-0 elements of Z_{2v+1} number v+1 and form an antichain
        return binomial(v + 1, k)
    return sum(
        binomial(j - 1, r - 1) * binomial(v - j + 1, r) * binomial(v + 1 - (j + r), k - (2 * j + r))
        for r in range(1, j + 1)
    )


def fence_table(n: int, variant: str = HYPERGEOMETRIC) -> WhitneyTable:
    if n < 0:
        raise PosetError("fence order must be >= 0")
    return WhitneyTable(tuple(fence_whitney(n, k, variant) for k in range(n + 1)), "closed_form")


def crown_whitney(n: int, k: int) -> int:
    """c(n, k) from c(n, k) = f(2n, k) - f(2n-4, k-2)."""
    if n < 2:
        raise PosetError("crown order must be >= 2")
    if k < 0 or k > 2 * n:
        return 0
    if k == 0:
        return 1
    if k == 1:
        return n
    return fence_whitney(2 * n, k) - fence_whitney(2 * n - 4, k - 2)


def crown_table(n: int) -> WhitneyTable:
    return WhitneyTable(tuple(crown_whitney(n, k) for k in range(2 * n + 1)), "closed_form")


def ap_whitney(mu: int, nu: int, k: int) -> int:
    """Whitney numbers of the asymmetric peak AP(mu, nu): a trapezoid."""
    if mu < 1 or nu < 1:
        raise PosetError("asymmetric peak needs mu, nu >= 1")
    top = mu + nu + 1
    if k < 0 or k > top:
        return 0
    if k == 0 or k == top:
        return 1
    lo, hi = min(mu, nu), max(mu, nu)
    if k <= lo:
        return k + 1
    if k <= hi:
        return lo + 1
    return 1 + mu + nu - k


def ap_table(mu: int, nu: int) -> WhitneyTable:
    return WhitneyTable(tuple(ap_whitney(mu, nu, k) for k in range(mu + nu + 2)), "closed_form")


# Experimental crown closed form.
#
# The summand carries (k-2j+1)_{j-2} and (n+j-k+1)_{k-2j-2}, whose index is
# negative for small j or large k.  Two readings are offered:
#
# "drop": (a)_{-m} = 1/((a-m)...(a-1)); a summand whose extended
#     denominator hits zero is discarded.
# "diagonal_limit": shift n -> n+e and k -> k+e together, write every
#     rising factorial as a Gamma ratio, and take e -> 0.  Along this
#     diagonal all Gamma ratios are rational in e, so the limit is exact.

_SERIES_ORDER = 6


class _Laurent:
    """Truncated Laurent series sum_{i} coeffs[i] e^(val+i)."""

    __slots__ = ("val", "coeffs")

    def __init__(self, val, coeffs):
        self.val = val
        self.coeffs = coeffs

    @classmethod
    def const(cls, c):
        return cls(0, [Fraction(c)] + [Fraction(0)] * (_SERIES_ORDER - 1))

    @classmethod
    def linear(cls, a):
        """The factor (a + e)."""
        if a == 0:
            return cls(1, [Fraction(1)] + [Fraction(0)] * (_SERIES_ORDER - 1))
        return cls(0, [Fraction(a), Fraction(1)] + [Fraction(0)] * (_SERIES_ORDER - 2))

    def __mul__(self, other):
        out = [Fraction(0)] * _SERIES_ORDER
        for i, x in enumerate(self.coeffs):
            if x:
                for j in range(_SERIES_ORDER - i):
                    out[i + j] += x * other.coeffs[j]
        return _Laurent(self.val + other.val, out)

    def inverse(self):
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("series has a vanishing leading coefficient")
        out = [Fraction(0)] * _SERIES_ORDER
        out[0] = 1 / c0
        for m in range(1, _SERIES_ORDER):
            out[m] = -sum(self.coeffs[i] * out[m - i] for i in range(1, m + 1)) / c0
        return _Laurent(-self.val, out)

    def coefficient(self, power):
        i = power - self.val
        if i >= _SERIES_ORDER:
            raise ArithmeticError("series truncated below the requested power")
        return self.coeffs[i] if i >= 0 else Fraction(0)


def _gamma_ratio(p, q):
    """Gamma(p+e)/Gamma(q+e) for integers p, q."""
    out = _Laurent.const(1)
    if p >= q:
        for i in range(q, p):
            out = out * _Laurent.linear(i)
        return out
    for i in range(p, q):
        out = out * _Laurent.linear(i)
    return out.inverse()


def _poch2(a):
    """(a+e)(a+1+e)."""
    return _Laurent.linear(a) * _Laurent.linear(a + 1)


def _crown_term_series(n, k, j):
    if n + j - k < 0:
        return None  # carries 1/Gamma(non-positive integer) = 0
    g = _gamma_ratio(k - j - 1, k - 2 * j + 1) * _gamma_ratio(n - j - 1, k - 2 * j + 1)
    g = g * _Laurent.const(Fraction(1, factorial(n + j - k) * factorial(j)))
    sq = _poch2(k - 2 * j - 1)
    lead = _poch2(k - j - 1) * _poch2(n - j - 1)
    # bracket = lead - sq*sq, aligned on a common valuation
    sq2 = sq * sq
    v = min(lead.val, sq2.val)
    br = [Fraction(0)] * _SERIES_ORDER
    for s, sign in ((lead, 1), (sq2, -1)):
        for i, c in enumerate(s.coeffs):
            if i + s.val - v < _SERIES_ORDER:
                br[i + s.val - v] += sign * c
    return g * _Laurent(v, br)


def _crown_closed_limit(n, k):
    terms = [t for j in range(k // 2 + 1) if (t := _crown_term_series(n, k, j)) is not None]
    if not terms:
        return Fraction(0)
    low = min(t.val for t in terms)
    for power in range(low, 0):
        if sum(t.coefficient(power) for t in terms) != 0:
            raise ArithmeticError(f"crown closed form has a pole at n={n}, k={k}")
    return sum((t.coefficient(0) for t in terms), Fraction(0))


def _rising_extended(a, m):
    if m >= 0:
        return Fraction(rising_factorial(a, m))
    den = rising_factorial(a + m, -m)
    return None if den == 0 else Fraction(1, den)


def _crown_closed_drop(n, k):
    total = Fraction(0)
    for j in range(k // 2 + 1):
        first = _rising_extended(k - 2 * j + 1, j - 2)
        second = _rising_extended(n + j - k + 1, k - 2 * j - 2)
        if first is None or second is None:
            continue
        bracket = (
            rising_factorial(k - j - 1, 2) * rising_factorial(n - j - 1, 2)
            - rising_factorial(k - 2 * j - 1, 2) ** 2
        )
        total += first * second * bracket / (factorial(j) * factorial(k - 2 * j))
    return total


CONVENTIONS = ("diagonal_limit", "drop")


def crown_whitney_closed(n: int, k: int, convention: str = "diagonal_limit"):
    """EXPERIMENTAL direct evaluation of the crown closed form.

    Not authoritative: :func:`crown_whitney` is.  Returns an int when the
    value is integral and the raw Fraction otherwise.
    """
    if n < 2:
        raise PosetError("crown order must be >= 2")
    if k < 0 or k > 2 * n:
        return 0
    if convention == "diagonal_limit":
        val = _crown_closed_limit(n, k)
    elif convention == "drop":
        val = _crown_closed_drop(n, k)
    else:
        raise ValueError(f"unknown convention {convention!r}; use one of {CONVENTIONS}")
    return int(val) if val.denominator == 1 else val


def crown_closed_comparison(n_max: int, convention: str = "diagonal_limit", n_min: int = 2) -> dict:
    """Compare the experimental closed form with crown_whitney cell by cell."""
    agree, disagree = [], []
    for n in range(n_min, n_max + 1):
        for k in range(2 * n + 1):
            want = crown_whitney(n, k)
            got = crown_whitney_closed(n, k, convention)
            (agree if got == want else disagree).append((n, k, got, want))
    return {
        "convention": convention,
        "checked": len(agree) + len(disagree),
        "agree": len(agree),
        "disagreements": [
            {"n": n, "k": k, "closed": str(got), "expected": str(want)}
            for n, k, got, want in disagree
        ],
    }
