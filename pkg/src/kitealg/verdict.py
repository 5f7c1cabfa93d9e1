"""Check outcomes.

Every bounded verification in this package reports a Verdict rather than a bare
bool. A check that quantified over everything it intended to and found no
violation Holds; a concrete counterexample makes it Fail; anything in between
(skipped instances, capped enumeration, inconclusive searches) is Unknown.
Witness payloads are plain (name, value) pairs so a failure can be replayed.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any


class Status(Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNKNOWN = "unknown"

    def __str__(self) -> str:  # pragma: no cover - display only
        return self.value


@dataclass(frozen=True)
class Verdict:
    status: Status
    checked: int = 0
    skipped: int = 0
    witness: tuple[tuple[str, Any], ...] = ()
    reason: str = ""

    def __post_init__(self) -> None:
        # a "holds" with skips would overstate coverage
        if self.status is Status.HOLDS and self.skipped > 0:
            object.__setattr__(self, "status", Status.UNKNOWN)

    @property
    def ok(self) -> bool:
        return self.status is Status.HOLDS

    @property
    def failed(self) -> bool:
        return self.status is Status.FAILS

    def witness_dict(self) -> dict[str, Any]:
        return dict(self.witness)

    def with_reason(self, reason: str) -> "Verdict":
        return replace(self, reason=reason)

    def describe(self) -> str:
        bits = [self.status.value, f"checked={self.checked}"]
        if self.skipped:
            bits.append(f"skipped={self.skipped}")
        if self.reason:
            bits.append(self.reason)
        return " ".join(bits)


def holds(checked: int, skipped: int = 0, reason: str = "") -> Verdict:
    return Verdict(Status.HOLDS, checked=checked, skipped=skipped, reason=reason)


def fails(witness: dict[str, Any] | None = None, checked: int = 0,
          skipped: int = 0, reason: str = "") -> Verdict:
    w = tuple(sorted((witness or {}).items(), key=lambda kv: kv[0]))
    return Verdict(Status.FAILS, checked=checked, skipped=skipped,
                   witness=w, reason=reason)


def unknown(checked: int = 0, skipped: int = 0, reason: str = "") -> Verdict:
    return Verdict(Status.UNKNOWN, checked=checked, skipped=skipped, reason=reason)


def merge(*verdicts: Verdict) -> Verdict:
    """Combine sub-checks: any failure wins, else any unknown, else holds.

    Counts are summed; the witness and reason come from the decisive verdict
    (first failure, or first unknown when nothing failed).
    """
    if not verdicts:
        return holds(0)
    total_checked = sum(v.checked for v in verdicts)
    total_skipped = sum(v.skipped for v in verdicts)
    decisive = None
    for v in verdicts:
        if v.status is Status.FAILS:
            decisive = v
            break
    if decisive is None:
        for v in verdicts:
            if v.status is Status.UNKNOWN:
                decisive = v
                break
    if decisive is None:
        return holds(total_checked, total_skipped)
    return Verdict(decisive.status, checked=total_checked, skipped=total_skipped,
                   witness=decisive.witness, reason=decisive.reason)


@dataclass
class Tally:
    """Mutable accumulator for loops that count instances and skips."""
    checked: int = 0
    skipped: int = 0
    notes: list[str] = field(default_factory=list)

    def hit(self) -> None:
        self.checked += 1

    def skip(self, note: str = "") -> None:
        self.skipped += 1
        if note and len(self.notes) < 8 and note not in self.notes:
            self.notes.append(note)

    def fail(self, witness: dict[str, Any], reason: str = "") -> Verdict:
        return fails(witness, checked=self.checked, skipped=self.skipped, reason=reason)

    def done(self, reason: str = "") -> Verdict:
        note = reason or "; ".join(self.notes)
        if self.skipped:
            return unknown(self.checked, self.skipped, note)
        return holds(self.checked, reason=note)
