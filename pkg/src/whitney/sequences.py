"""Unimodality and log-concavity predicates, and the fence/crown sweep."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .closed import crown_table, fence_table
from .families import Crown, Fence

__all__ = [
    "Witness",
    "Verdict",
    "is_unimodal",
    "is_log_concave",
    "ConjectureReport",
    "conjecture_sweep",
    "summarize",
]


@dataclass(frozen=True)
class Witness:
    """Three positions and their values that break a predicate.

    For log-concavity the indices are (k-1, k, k+1); for unimodality they
    are (i, j, k) with i < j < k and values a > b < c (a valley).
    """

    indices: tuple
    values: tuple

    @property
    def k(self) -> int:
        return self.indices[1]

    def to_json(self):
        return {"k": self.k, "indices": list(self.indices), "triple": [str(v) for v in self.values]}


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: Optional[Witness] = None

    def __bool__(self):
        return self.holds


def is_unimodal(seq: Sequence[int]) -> Verdict:
    """True iff seq weakly rises, then weakly falls."""
    peak = 0  # index of the largest value seen before the first descent
    falling = False
    for k in range(1, len(seq)):
        if seq[k] < seq[k - 1]:
            if not falling:
                peak = k - 1
            falling = True
        elif seq[k] > seq[k - 1] and falling:
            return Verdict(False, Witness((peak, k - 1, k), (seq[peak], seq[k - 1], seq[k])))
    return Verdict(True)


def is_log_concave(seq: Sequence[int], strict: bool = False) -> Verdict:
    """seq[k]^2 >= seq[k-1] seq[k+1] (or >) for every interior k."""
    for k in range(1, len(seq) - 1):
        lhs = seq[k] * seq[k]
        rhs = seq[k - 1] * seq[k + 1]
        if lhs < rhs or (strict and lhs == rhs):
            return Verdict(False, Witness((k - 1, k, k + 1), (seq[k - 1], seq[k], seq[k + 1])))
    return Verdict(True)


@dataclass
class ConjectureReport:
    instance: object
    unimodal: bool
    log_concave: bool
    strictly_log_concave: bool
    claim: Optional[str]            # "log_concave", "strictly_log_concave", or None
    witnesses: dict = field(default_factory=dict)

    @property
    def in_range(self) -> bool:
        return self.claim is not None

    @property
    def passes(self) -> bool:
        """The claimed property holds (vacuously true outside the claimed range)."""
        return self.claim is None or getattr(self, self.claim)

    @property
    def first_violation(self) -> Optional[Witness]:
        if self.claim and not self.passes:
            return self.witnesses[self.claim]
        for name in ("unimodal", "log_concave", "strictly_log_concave"):
            if name in self.witnesses:
                return self.witnesses[name]
        return None

    def to_json(self) -> dict:
        fv = self.first_violation
        return {
            "instance": self.instance.to_json(),
            "unimodal": self.unimodal,
            "log_concave": self.log_concave,
            "strictly_log_concave": self.strictly_log_concave,
            "claim": self.claim,
            "passes": self.passes,
            "first_violation": fv.to_json() if fv else None,
            "witnesses": {k: w.to_json() for k, w in self.witnesses.items()},
        }


def _report(instance, seq, claim):
    uni = is_unimodal(seq)
    lc = is_log_concave(seq)
    slc = is_log_concave(seq, strict=True)
    witnesses = {
        name: v.witness
        for name, v in (("unimodal", uni), ("log_concave", lc), ("strictly_log_concave", slc))
        if not v
    }
    return ConjectureReport(instance, uni.holds, lc.holds, slc.holds, claim, witnesses)


def conjecture_sweep(max_cardinality: int) -> list[ConjectureReport]:
    """Fences Z_n with 1 <= n <= max_cardinality and crowns with 2n <= max_cardinality.

    Fences other than n = 3 are claimed log-concave; crowns with n >= 4
    strictly log-concave.  Tables come from the closed forms.
    """
    if max_cardinality < 1:
        raise ValueError("max_cardinality must be >= 1")
    reports = []
    for n in range(1, max_cardinality + 1):
        claim = "log_concave" if n != 3 else None
        reports.append(_report(Fence(n), fence_table(n).counts, claim))
    for n in range(2, max_cardinality // 2 + 1):
        claim = "strictly_log_concave" if n >= 4 else None
        reports.append(_report(Crown(n), crown_table(n).counts, claim))
    return reports


def summarize(reports: list[ConjectureReport]) -> dict:
    failing = [r for r in reports if not r.passes]
    notes = []
    for r in reports:
        if r.in_range:
            continue
        broken = [name for name in ("unimodal", "log_concave", "strictly_log_concave")
                  if not getattr(r, name)]
        if broken:
            notes.append({"instance": str(r.instance), "fails": broken})
    return {
        "instances": len(reports),
        "claimed": sum(r.in_range for r in reports),
        "all_pass": not failing,
        "failing": [str(r.instance) for r in failing],
        "outside_claim": notes,
    }
