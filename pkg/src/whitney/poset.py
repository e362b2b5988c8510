"""Finite posets, their order ideals, and the brute-force Whitney oracle.

A :class:`Poset` stores its elements in a fixed order together with the
irredundant cover relation.  Relations are kept as Python-int bitmasks
indexed by element position, so down-sets and order ideals are plain ints.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Sequence

from . import _oracle_py

try:
    from . import _oracle as _oracle_ext
except ImportError:  # extension not built
    _oracle_ext = None

__all__ = [
    "Poset",
    "PosetError",
    "CycleError",
    "OracleBoundError",
    "OrderIdeal",
    "WhitneyTable",
    "poset_from_covers",
    "minimal_elements",
    "delete_element",
    "enumerate_ideals",
    "whitney_oracle",
    "load_poset",
    "to_dot",
    "kernel_name",
    "DEFAULT_MAX_ELEMENTS",
    "DEFAULT_MAX_IDEALS",
]

DEFAULT_MAX_ELEMENTS = 30
DEFAULT_MAX_IDEALS = 5_000_000


class PosetError(ValueError):
    pass


class CycleError(PosetError):
    def __init__(self, cycle):
        self.cycle = list(cycle)
        path = " < ".join(str(e) for e in self.cycle)
        super().__init__(f"cover relation has a cycle: {path}")


class OracleBoundError(RuntimeError):
    pass


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """Immutable finite poset given by elements and cover pairs.

    Redundant covers (implied by transitivity) are dropped on construction.
    """

    __slots__ = ("elements", "covers", "_index", "_lower", "_below", "_order")

    def __init__(self, elements: Iterable[Hashable], covers: Iterable[Sequence] = ()):
        elements = tuple(elements)
        index = {}
        for i, e in enumerate(elements):
            if e in index:
                raise PosetError(f"duplicate element {e!r}")
            index[e] = i
        n = len(elements)
        lower = [0] * n
        for pair in covers:
            a, b = pair
            for e in (a, b):
                if e not in index:
                    raise PosetError(f"unknown element {e!r} in covers")
            if a == b:
                raise CycleError([a, a])
            lower[index[b]] |= 1 << index[a]

        order = _topological_order(lower)
        if order is None:
            raise CycleError([elements[i] for i in _find_cycle(lower)])

        below = [0] * n
        for b in order:
            acc = 0
            for a in _bits(lower[b]):
                acc |= below[a] | (1 << a)
            below[b] = acc
        # a lower neighbour a of b is a cover unless it sits below another one
        for b in range(n):
            keep = lower[b]
            for c in _bits(lower[b]):
                keep &= ~below[c]
            lower[b] = keep

        self.elements = elements
        self._index = index
        self._lower = tuple(lower)
        self._below = tuple(below)
        self._order = tuple(order)
        self.covers = tuple(
            (elements[a], elements[b]) for b in range(n) for a in _bits(lower[b])
        )

    # basic protocol

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self._index

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return f"Poset({len(self)} elements, {len(self.covers)} covers)"

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and set(self.covers) == set(other.covers)

    def __hash__(self):
        return hash((self.elements, frozenset(self.covers)))

    # relations

    def index(self, x) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise PosetError(f"{x!r} is not an element of the poset") from None

    def lower_covers(self, x) -> list:
        return [self.elements[i] for i in _bits(self._lower[self.index(x)])]

    def upper_covers(self, x) -> list:
        bit = 1 << self.index(x)
        return [self.elements[j] for j, m in enumerate(self._lower) if m & bit]

    def less(self, a, b) -> bool:
        """Strict order a < b."""
        return bool(self._below[self.index(b)] >> self.index(a) & 1)

    def leq(self, a, b) -> bool:
        return a == b or self.less(a, b)

    def is_minimal(self, x) -> bool:
        return self._lower[self.index(x)] == 0

    def minimal_elements(self) -> list:
        return [e for e, m in zip(self.elements, self._lower) if m == 0]

    def maximal_elements(self) -> list:
        used = 0
        for m in self._lower:
            used |= m
        return [e for i, e in enumerate(self.elements) if not used >> i & 1]

    def height(self, x) -> int:
        """Length of the longest chain ending at x (0 for minimal elements)."""
        return self.heights()[self.index(x)]

    def heights(self) -> list:
        h = [0] * len(self)
        for b in self._order:
            for a in _bits(self._lower[b]):
                h[b] = max(h[b], h[a] + 1)
        return h

    def linear_extension(self) -> list:
        return [self.elements[i] for i in self._order]

    def is_ideal_mask(self, mask: int) -> bool:
        return all(not self._lower[i] & ~mask for i in _bits(mask))

    # derived posets

    def induced(self, keep: Iterable) -> "Poset":
        """Induced subposet on ``keep`` (element order of self preserved)."""
        keep_mask = 0
        for x in keep:
            keep_mask |= 1 << self.index(x)
        elems = [e for i, e in enumerate(self.elements) if keep_mask >> i & 1]
        covers = []
        for b in _bits(keep_mask):
            cand = self._below[b] & keep_mask
            # covers of the restricted order: candidates not below another candidate
            direct = cand
            for c in _bits(cand):
                direct &= ~self._below[c]
            covers.extend((self.elements[a], self.elements[b]) for a in _bits(direct))
        return Poset(elems, covers)

    def delete(self, x) -> "Poset":
        i = self.index(x)
        return self.induced(e for j, e in enumerate(self.elements) if j != i)

    def relabel(self, mapping) -> "Poset":
        """Rename elements through a dict or callable."""
        f = mapping if callable(mapping) else mapping.__getitem__
        return Poset([f(e) for e in self.elements], [(f(a), f(b)) for a, b in self.covers])

    # serialization

    def to_json(self) -> dict:
        return {"elements": list(self.elements), "covers": [list(c) for c in self.covers]}

    @classmethod
    def from_json(cls, data) -> "Poset":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            elements = data["elements"]
            covers = data.get("covers", [])
        except (KeyError, TypeError, AttributeError):
            raise PosetError('poset JSON needs an "elements" list and a "covers" list') from None
        bad = [c for c in covers if not isinstance(c, (list, tuple)) or len(c) != 2]
        if bad:
            raise PosetError(f"malformed cover entry {bad[0]!r}")
        return cls(elements, [tuple(c) for c in covers])


def _kahn(lower):
    """Kahn's algorithm; returns the (possibly partial) topological order."""
    n = len(lower)
    indeg = [bin(m).count("1") for m in lower]
    upper = [[] for _ in range(n)]
    for b, m in enumerate(lower):
        for a in _bits(m):
            upper[a].append(b)
    ready = [i for i in range(n) if indeg[i] == 0]
    ready.reverse()
    order = []
    while ready:
        a = ready.pop()
        order.append(a)
        for b in upper[a]:
            indeg[b] -= 1
            if indeg[b] == 0:
                ready.append(b)
    return order


def _topological_order(lower):
    order = _kahn(lower)
    return order if len(order) == len(lower) else None


def _find_cycle(lower):
    # every node Kahn's pass leaves behind has a lower neighbour also left behind
    left = set(range(len(lower))) - set(_kahn(lower))
    seen = {}
    path = []
    x = min(left)
    while x not in seen:
        seen[x] = len(path)
        path.append(x)
        x = next(a for a in _bits(lower[x]) if a in left)
    cyc = path[seen[x]:] + [x]
    cyc.reverse()
    return cyc


def poset_from_covers(elements, covers=()) -> Poset:
    return Poset(elements, covers)


def minimal_elements(P: Poset) -> list:
    return P.minimal_elements()


def delete_element(P: Poset, x) -> Poset:
    return P.delete(x)


def load_poset(path) -> Poset:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise PosetError(f"{path}: invalid JSON ({exc})") from None
    return Poset.from_json(data)


@dataclass(frozen=True)
class OrderIdeal:
    """A down-set of ``poset``, stored as a bitmask over element positions."""

    poset: Poset
    mask: int

    def __len__(self):
        return bin(self.mask).count("1")

    def __contains__(self, x):
        return x in self.poset and bool(self.mask >> self.poset.index(x) & 1)

    def __iter__(self):
        return (self.poset.elements[i] for i in _bits(self.mask))

    @property
    def members(self) -> frozenset:
        return frozenset(self)

    def __repr__(self):
        return f"OrderIdeal({sorted(map(str, self))})"


@dataclass(frozen=True)
class WhitneyTable:
    """Counts of order ideals by cardinality, k = 0..|P|."""

    counts: tuple
    source: str = "oracle"

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))

    def __len__(self):
        return len(self.counts)

    def __getitem__(self, k):
        return self.counts[k]

    def __iter__(self):
        return iter(self.counts)

    def get(self, k: int) -> int:
        """Count at k, zero outside the table."""
        return self.counts[k] if 0 <= k < len(self.counts) else 0

    @property
    def total(self) -> int:
        return sum(self.counts)

    def to_json(self) -> dict:
        return {"counts": [str(c) for c in self.counts], "source": self.source}

    @classmethod
    def from_json(cls, data) -> "WhitneyTable":
        return cls(tuple(int(c) for c in data["counts"]), data.get("source", "oracle"))


def _check_size(P, max_elements):
    if len(P) > max_elements:
        raise OracleBoundError(
            f"oracle refuses posets with more than {max_elements} elements (got {len(P)})"
        )


def _ext_lower_masks(P):
    """Lower-cover masks renumbered along the stored linear extension."""
    pos = {old: new for new, old in enumerate(P._order)}
    out = []
    for old in P._order:
        m = 0
        for a in _bits(P._lower[old]):
            m |= 1 << pos[a]
        out.append(m)
    return out


def enumerate_ideals(
    P: Poset,
    max_elements: int = DEFAULT_MAX_ELEMENTS,
    max_ideals: int = DEFAULT_MAX_IDEALS,
) -> Iterator[OrderIdeal]:
    """Yield every order ideal of P exactly once, the empty one first.

    Elements are decided one at a time along a linear extension; an element
    may join only when its lower covers already have.  Every partial choice
    extends to an ideal, so work is proportional to (#ideals x |P|).
    """
    _check_size(P, max_elements)
    n = len(P)
    order = P._order
    lower = _ext_lower_masks(P)
    produced = 0
    stack = [(0, 0, 0)]
    while stack:
        i, mask, orig = stack.pop()
        while i < n:
            if not lower[i] & ~mask:
                stack.append((i + 1, mask | (1 << i), orig | (1 << order[i])))
            i += 1
        produced += 1
        if produced > max_ideals:
            raise OracleBoundError(f"oracle stopped after {max_ideals} ideals (max_ideals bound)")
        yield OrderIdeal(P, orig)


def _use_extension(n):
    return _oracle_ext is not None and n <= 64 and not os.environ.get("WHITNEY_PURE_PYTHON")


def kernel_name(n: int = 0) -> str:
    return "cython" if _use_extension(n) else "python"


def whitney_oracle(
    P: Poset,
    max_elements: int = DEFAULT_MAX_ELEMENTS,
    max_ideals: int = DEFAULT_MAX_IDEALS,
    kernel: str | None = None,
) -> WhitneyTable:
    """Whitney numbers of J(P) by exhaustive ideal enumeration.

    ``kernel`` forces "python" or "cython"; by default the compiled counter is
    used when it is importable.
    """
    _check_size(P, max_elements)
    n = len(P)
    lower = _ext_lower_masks(P)
    if kernel is None:
        kernel = kernel_name(n)
    if kernel == "cython":
        if _oracle_ext is None:
            raise RuntimeError("compiled oracle kernel is not available")
        counts = _oracle_ext.count_ideals(n, lower, max_ideals)
    elif kernel == "python":
        counts = _oracle_py.count_ideals(n, lower, max_ideals)
    else:
        raise ValueError(f"unknown kernel {kernel!r}")
    if counts is None:
        raise OracleBoundError(f"oracle stopped after {max_ideals} ideals (max_ideals bound)")
    return WhitneyTable(tuple(counts), "oracle")


def to_dot(P: Poset, name: str = "P") -> str:
    """Hasse diagram as a DOT digraph, edges lower -> upper, grouped by height."""
    heights = P.heights()

    def q(x):
        return '"' + str(x).replace("\\", "\\\\").replace('"', '\\"') + '"'

    lines = [f"digraph {q(name)} {{", "  rankdir=BT;", "  node [shape=circle];"]
    for level in sorted(set(heights)):
        names = " ".join(q(e) for e, h in zip(P.elements, heights) if h == level)
        lines.append(f"  {{ rank=same; {names} }}")
    for a, b in P.covers:
        lines.append(f"  {q(a)} -> {q(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
