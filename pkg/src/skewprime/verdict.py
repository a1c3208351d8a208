"""Three-valued outcomes for universally quantified questions.

Only refutations and exact certificates are definitive.  A search that ran
out of room without finding a counterexample is reported as ``undecided``
together with the bound that was reached.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

PROVEN = "proven"
REFUTED = "refuted"
UNDECIDED = "undecided"


@dataclass(frozen=True)
class Verdict:
    status: str
    reason: str
    # "exact" for a certificate covering the whole quantifier, "pool" when the
    # quantifier ranged over an explicit finite pool supplied by the caller,
    # "bound" for an exact argument that was also replayed by enumeration up
    # to ``bound``.
    scope: str = "exact"
    bound: int | None = None
    data: dict[str, Any] = field(default_factory=dict)

    @property
    def proven(self) -> bool:
        return self.status == PROVEN

    @property
    def refuted(self) -> bool:
        return self.status == REFUTED

    @property
    def undecided(self) -> bool:
        return self.status == UNDECIDED

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"status": self.status, "reason": self.reason}
        if self.status == PROVEN:
            out["scope"] = self.scope
        if self.bound is not None:
            out["bound"] = self.bound
        if self.data:
            out["data"] = self.data
        return out

    def label(self) -> str:
        if self.status == PROVEN:
            if self.scope == "bound":
                return f"Proven(bound {self.bound})"
            return "Proven" if self.scope == "exact" else f"Proven({self.scope})"
        if self.status == REFUTED:
            return "Refuted"
        return f"Undecided({self.bound})" if self.bound is not None else "Undecided"

    def __str__(self) -> str:
        return f"{self.label()}: {self.reason}"


def proven(reason: str, scope: str = "exact", bound: int | None = None, **data: Any) -> Verdict:
    return Verdict(PROVEN, reason, scope=scope, bound=bound, data=data)


def refuted(reason: str, **data: Any) -> Verdict:
    return Verdict(REFUTED, reason, data=data)


def undecided(reason: str, bound: int | None = None, **data: Any) -> Verdict:
    return Verdict(UNDECIDED, reason, bound=bound, data=data)
