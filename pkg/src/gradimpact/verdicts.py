"""Verdict and witness records shared by the falsification checks."""

from __future__ import annotations

from dataclasses import dataclass, field

from .framework import ArgumentationFramework, Attack

NO_COUNTEREXAMPLE = "no-counterexample"
COUNTEREXAMPLE = "counterexample"


@dataclass(frozen=True)
class Witness:
    """A concrete instance on which a checked equality or bound fails.

    Carries everything needed to replay the failure: the frameworks involved,
    the argument sets and targets quantified over, any renaming or added or
    removed attacks, and the two numeric sides of the comparison.
    """

    frameworks: tuple[ArgumentationFramework, ...]
    lhs: float
    rhs: float
    subjects: tuple[tuple[str, ...], ...] = ()
    targets: tuple[str, ...] = ()
    mapping: tuple[tuple[str, str], ...] = ()
    attack: Attack | None = None
    removed_attacks: tuple[Attack, ...] = ()
    description: str = ""

    @property
    def gap(self) -> float:
        return abs(self.lhs - self.rhs)

    def to_dict(self) -> dict:
        payload: dict = {
            "frameworks": [af.to_dict() for af in self.frameworks],
            "lhs": self.lhs,
            "rhs": self.rhs,
        }
        if self.subjects:
            payload["subjects"] = [list(xs) for xs in self.subjects]
        if self.targets:
            payload["targets"] = list(self.targets)
        if self.mapping:
            payload["mapping"] = {a: b for a, b in self.mapping}
        if self.attack is not None:
            payload["attack"] = list(self.attack)
        if self.removed_attacks:
            payload["removed_attacks"] = [list(c) for c in self.removed_attacks]
        if self.description:
            payload["description"] = self.description
        return payload


@dataclass(frozen=True)
class PrincipleVerdict:
    """Outcome of searching a corpus for counterexamples to one property."""

    principle: str
    semantics: str
    status: str
    trials: int
    tolerance: float
    measure: str | None = None
    witness: Witness | None = None
    scope: str = "all"
    notes: str = ""
    extras: tuple[tuple[str, str], ...] = field(default=(), repr=False)

    @property
    def passed(self) -> bool:
        return self.status == NO_COUNTEREXAMPLE

    def to_dict(self) -> dict:
        payload: dict = {
            "principle": self.principle,
            "semantics": self.semantics,
            "status": self.status,
            "trials": self.trials,
            "tolerance": self.tolerance,
            "scope": self.scope,
        }
        if self.measure is not None:
            payload["measure"] = self.measure
        if self.witness is not None:
            payload["witness"] = self.witness.to_dict()
        if self.notes:
            payload["notes"] = self.notes
        for key, value in self.extras:
            payload[key] = value
        return payload
