"""Rank polynomials of ideal lattices and the star-composition rule.

For minimal x1 in P1 and x2 in P2, the lattice of ideals of the star
composition P1(x1) * P2(x2) has rank polynomial

    R(P1) R(P2) + X^3 R(P1 - x1) R(P2 - x2).

The FAP pipeline applies this twice, feeding it closed-form fence and
asymmetric-peak polynomials.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import zip_longest

from .closed import ap_whitney, fence_whitney
from .families import _check_fap
from .poset import Poset, WhitneyTable, whitney_oracle

__all__ = [
    "RankPolynomial",
    "rp_from_table",
    "rp_add",
    "rp_mul",
    "rp_shift",
    "star_rank_polynomial",
    "fence_rank_polynomial",
    "chain_rank_polynomial",
    "ap_rank_polynomial",
    "oracle_rank_polynomial",
    "fap_rank_polynomial",
]


@dataclass(frozen=True)
class RankPolynomial:
    """Integer polynomial sum coeffs[k] X^k, trailing zeros trimmed."""

    coeffs: tuple

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        return rp_add(self, other)

    def __mul__(self, other):
        return rp_mul(self, other)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("X" if k == 1 else f"X^{k}")
            coef = str(c) if (c != 1 or k == 0) else ""
            parts.append(coef + mono)
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data) -> "RankPolynomial":
        return cls(tuple(int(c) for c in data["coeffs"]))


ONE = RankPolynomial((1,))


def rp_from_table(t) -> RankPolynomial:
    counts = t.counts if isinstance(t, WhitneyTable) else t
    return RankPolynomial(tuple(counts))


def rp_add(p: RankPolynomial, q: RankPolynomial) -> RankPolynomial:
    return RankPolynomial(tuple(a + b for a, b in zip_longest(p.coeffs, q.coeffs, fillvalue=0)))


def rp_mul(p: RankPolynomial, q: RankPolynomial) -> RankPolynomial:
    if not p.coeffs or not q.coeffs:
        return RankPolynomial(())
    out = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a:
            for j, b in enumerate(q.coeffs):
                out[i + j] += a * b
    return RankPolynomial(tuple(out))


def rp_shift(p: RankPolynomial, s: int) -> RankPolynomial:
    if s < 0:
        raise ValueError("shift must be >= 0")
    return RankPolynomial((0,) * s + p.coeffs)


def star_rank_polynomial(R1, R1_del, R2, R2_del) -> RankPolynomial:
    """Rank polynomial of the star composition from its four ingredients."""
    return rp_add(rp_mul(R1, R2), rp_shift(rp_mul(R1_del, R2_del), 3))


def fence_rank_polynomial(n: int) -> RankPolynomial:
    return RankPolynomial(tuple(fence_whitney(n, k) for k in range(n + 1)))


def chain_rank_polynomial(length: int) -> RankPolynomial:
    """A chain's ideals are its prefixes: 1 + X + ... + X^length."""
    return RankPolynomial((1,) * (length + 1))


def ap_rank_polynomial(mu: int, nu: int) -> RankPolynomial:
    """AP(mu, nu); a zero-length side degenerates to a chain of the other side plus the top."""
    if mu == 0 or nu == 0:
        return chain_rank_polynomial(mu + nu + 1)
    return RankPolynomial(tuple(ap_whitney(mu, nu, k) for k in range(mu + nu + 2)))


def oracle_rank_polynomial(P: Poset, **bounds) -> RankPolynomial:
    return rp_from_table(whitney_oracle(P, **bounds))


def fap_rank_polynomial(w: int, x: int, y: int, z: int, association: str = "left") -> RankPolynomial:
    """Rank polynomial of FAP(w, x, y, z) by two star compositions.

    Pieces: P1 = fence(w-2) attached at its last element, P2 = AP(x+1, y+1)
    attached at the bottoms of both chains, P3 = fence(z-2) attached at its
    first element.  Deleting an end of an odd fence leaves an even fence of
    one less; deleting a chain bottom of an AP shortens that chain.

    ``association`` "left" builds (P1 * P2) * P3, "right" builds P1 * (P2 * P3).
    """
    _check_fap(w, x, y, z)
    p1, p1_del = fence_rank_polynomial(w - 2), fence_rank_polynomial(w - 3)
    p3, p3_del = fence_rank_polynomial(z - 2), fence_rank_polynomial(z - 3)
    ap = ap_rank_polynomial(x + 1, y + 1)
    ap_no_a = ap_rank_polynomial(x, y + 1)      # a_w removed
    ap_no_d = ap_rank_polynomial(x + 1, y)      # d_1 removed
    ap_no_both = ap_rank_polynomial(x, y)

    if association == "left":
        q = star_rank_polynomial(p1, p1_del, ap, ap_no_a)
        # Q - d1 is still P1 * (P2 - d1), attached at a_w
        q_del = star_rank_polynomial(p1, p1_del, ap_no_d, ap_no_both)
        return star_rank_polynomial(q, q_del, p3, p3_del)
    if association == "right":
        q = star_rank_polynomial(ap, ap_no_d, p3, p3_del)
        q_del = star_rank_polynomial(ap_no_a, ap_no_both, p3, p3_del)
        return star_rank_polynomial(p1, p1_del, q, q_del)
    raise ValueError("association must be 'left' or 'right'")
