"""Fences, crowns, asymmetric peaks, FAP posets and the star composition."""
from __future__ import annotations

from dataclasses import dataclass, fields

from .poset import Poset, PosetError

__all__ = [
    "fence",
    "crown",
    "asymmetric_peak",
    "chain",
    "star_compose",
    "fap",
    "Fence",
    "Crown",
    "AP",
    "FAP",
    "family_from_json",
]


def fence(n: int) -> Poset:
    """Zigzag z1 < z2 > z3 < z4 > ...; odd-indexed elements are minimal."""
    if n < 0:
        raise PosetError("fence order must be >= 0")
    elems = [f"z{i}" for i in range(1, n + 1)]
    covers = []
    for top in range(2, n + 1, 2):
        covers.append((f"z{top - 1}", f"z{top}"))
        if top + 1 <= n:
            covers.append((f"z{top + 1}", f"z{top}"))
    return Poset(elems, covers)


def crown(n: int) -> Poset:
    """Crown on zeta0..zeta{2n-1}.

    Even-indexed elements are minimal; zeta_{2h} lies below its two cyclic
    neighbours zeta_{2h+1} and zeta_{2h-1} (indices mod 2n).
    """
    if n < 2:
        raise PosetError("crown order must be >= 2")
    m = 2 * n
    elems = [f"zeta{i}" for i in range(m)]
    covers = []
    for h in range(n):
        lo = 2 * h
        for up in sorted({(lo + 1) % m, (lo - 1) % m}):
            covers.append((f"zeta{lo}", f"zeta{up}"))
    return Poset(elems, covers)


def chain(length: int, prefix: str = "c") -> Poset:
    elems = [f"{prefix}{i}" for i in range(1, length + 1)]
    return Poset(elems, list(zip(elems, elems[1:])))


def asymmetric_peak(mu: int, nu: int) -> Poset:
    """Chains a1<..<a_mu and b1<..<b_nu, both capped by a common top "omega"."""
    if mu < 1 or nu < 1:
        raise PosetError("asymmetric peak needs mu, nu >= 1")
    a = [f"a{i}" for i in range(1, mu + 1)]
    b = [f"b{i}" for i in range(1, nu + 1)]
    covers = list(zip(a, a[1:])) + list(zip(b, b[1:]))
    covers += [(a[-1], "omega"), (b[-1], "omega")]
    return Poset(a + b + ["omega"], covers)


def star_compose(P1: Poset, x1, P2: Poset, x2, new="x~") -> Poset:
    """Disjoint union of P1 and P2 plus a new element covering x1 and x2.

    Element names are kept when P1, P2 and ``new`` do not clash; otherwise
    they are prefixed with "1." and "2." respectively.
    """
    for P, x in ((P1, x1), (P2, x2)):
        if x not in P:
            raise PosetError(f"attachment point {x!r} is not in the poset")
        if not P.is_minimal(x):
            raise PosetError(f"attachment point {x!r} is not minimal")
    names1, names2 = set(P1.elements), set(P2.elements)
    if names1 & names2 or new in names1 or new in names2:
        P1 = P1.relabel(lambda e: f"1.{e}")
        P2 = P2.relabel(lambda e: f"2.{e}")
        x1, x2 = f"1.{x1}", f"2.{x2}"
    elems = list(P1.elements) + list(P2.elements) + [new]
    covers = list(P1.covers) + list(P2.covers) + [(x1, new), (x2, new)]
    return Poset(elems, covers)


def _check_fap(w, x, y, z):
    if w < 3 or z < 3 or w % 2 == 0 or z % 2 == 0:
        raise PosetError("FAP needs odd w, z >= 3")
    if x < 1 or y < 1:
        raise PosetError("FAP needs x, y >= 1")


def fap(w: int, x: int, y: int, z: int) -> Poset:
    """Fence with one higher asymmetric peak.

    Fence a1..aw, chain aw < b1 < .. < bx < omega > cy > .. > c1 > d1, then
    the fence d1 < d2 > d3 < ... dz.
    """
    _check_fap(w, x, y, z)
    a = [f"a{i}" for i in range(1, w + 1)]
    b = [f"b{i}" for i in range(1, x + 1)]
    c = [f"c{i}" for i in range(1, y + 1)]
    d = [f"d{i}" for i in range(1, z + 1)]
    covers = []
    for top in range(2, w + 1, 2):
        covers += [(a[top - 2], a[top - 1]), (a[top], a[top - 1])]
    covers.append((a[-1], b[0]))
    covers += list(zip(b, b[1:]))
    covers += list(zip(c, c[1:]))
    covers += [(b[-1], "omega"), (c[-1], "omega"), (d[0], c[0])]
    for top in range(2, z + 1, 2):
        covers += [(d[top - 2], d[top - 1]), (d[top], d[top - 1])]
    return Poset(a + b + ["omega"] + c + d, covers)


@dataclass(frozen=True)
class Fence:
    n: int

    def poset(self):
        return fence(self.n)

    def to_json(self):
        return {"family": "fence", "n": self.n}

    def __str__(self):
        return f"fence(n={self.n})"


@dataclass(frozen=True)
class Crown:
    n: int

    def poset(self):
        return crown(self.n)

    def to_json(self):
        return {"family": "crown", "n": self.n}

    def __str__(self):
        return f"crown(n={self.n})"


@dataclass(frozen=True)
class AP:
    mu: int
    nu: int

    def poset(self):
        return asymmetric_peak(self.mu, self.nu)

    def to_json(self):
        return {"family": "ap", "mu": self.mu, "nu": self.nu}

    def __str__(self):
        return f"ap(mu={self.mu}, nu={self.nu})"


@dataclass(frozen=True)
class FAP:
    w: int
    x: int
    y: int
    z: int

    def poset(self):
        return fap(self.w, self.x, self.y, self.z)

    def to_json(self):
        return {"family": "fap", "w": self.w, "x": self.x, "y": self.y, "z": self.z}

    def __str__(self):
        return f"fap(w={self.w}, x={self.x}, y={self.y}, z={self.z})"


_FAMILIES = {"fence": Fence, "crown": Crown, "ap": AP, "fap": FAP}


def family_from_json(data: dict):
    """Rebuild a family record from its JSON form; extra keys are ignored."""
    try:
        cls = _FAMILIES[data["family"]]
        return cls(**{f.name: int(data[f.name]) for f in fields(cls)})
    except KeyError:
        raise PosetError(f"not a family record: {data!r}") from None
