"""Gradual acceptability semantics and their structural property checks.

Four scoring rules are supported.  Three are fixed points computed by Picard
iteration from the all-ones vector:

* ``hbs``: sigma(a) = 1 / (1 + sum of attacker degrees)
* ``car``: sigma(a) = 1 / (1 + k + (sum of attacker degrees) / k) with k
  attackers, and 1 when unattacked
* ``max``: sigma(a) = 1 / (1 + max of attacker degrees)

The fourth, ``cs``, scores by damped alternating counts of attacker chains:
with adjacency M (rows index targets), normalisation N equal to the largest
in-degree and damping factor alpha, the degree vector solves
(I + alpha * M / N) v = 1.  The series view of that solution converges for
any alpha below 1, and a user-supplied normalisation below the largest
in-degree is rejected because the guarantee is lost.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Mapping

import numpy as np

from .errors import DivergentSeriesError, NonConvergenceError, UnknownArgumentError
from .framework import ArgumentationFramework, Attack
from .verdicts import COUNTEREXAMPLE, NO_COUNTEREXAMPLE, PrincipleVerdict, Witness

KINDS = ("hbs", "car", "max", "cs")

DEFAULT_DAMPING = 0.98
DEFAULT_TOLERANCE = 1e-12
DEFAULT_MAX_ITERATIONS = 10**6
CHECK_TOLERANCE = 1e-7


@dataclass(frozen=True)
class CountingConfig:
    """Damping factor and optional normalisation override for ``cs``."""

    damping: float = DEFAULT_DAMPING
    norm_override: float | None = None

    def __post_init__(self) -> None:
        if not 0.0 < self.damping < 1.0:
            raise ValueError("damping must lie strictly between 0 and 1")
        if self.norm_override is not None and self.norm_override <= 0.0:
            raise ValueError("norm_override must be positive")


@dataclass(frozen=True)
class SemanticsSpec:
    """Which scoring rule to run and how precisely to run it."""

    kind: str
    tolerance: float = DEFAULT_TOLERANCE
    max_iterations: int = DEFAULT_MAX_ITERATIONS
    counting: CountingConfig = field(default_factory=CountingConfig)

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown semantics {self.kind!r}, expected one of {KINDS}")
        if not 0.0 < self.tolerance < 1.0:
            raise ValueError("tolerance must lie strictly between 0 and 1")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")


class Weighting(Mapping[str, float]):
    """Total map from arguments to acceptability degrees in [0, 1]."""

    __slots__ = ("_degrees",)

    def __init__(self, degrees: Mapping[str, float]):
        cleaned: dict[str, float] = {}
        for a, raw in degrees.items():
            value = float(raw)
            # Tolerate float overshoot from the solvers, nothing more.
            if not -1e-9 <= value <= 1.0 + 1e-9:
                raise ValueError(f"degree {value!r} for {a!r} outside [0, 1]")
            cleaned[a] = min(1.0, max(0.0, value))
        self._degrees = dict(sorted(cleaned.items()))

    def __getitem__(self, argument: str) -> float:
        try:
            return self._degrees[argument]
        except KeyError:
            raise UnknownArgumentError(argument) from None

    def __iter__(self) -> Iterator[str]:
        return iter(self._degrees)

    def __len__(self) -> int:
        return len(self._degrees)

    def __repr__(self) -> str:
        inner = ", ".join(f"{a}: {d:.6f}" for a, d in self._degrees.items())
        return f"Weighting({{{inner}}})"

    def as_dict(self) -> dict[str, float]:
        return dict(self._degrees)


def counting_norm(af: ArgumentationFramework, config: CountingConfig) -> float | None:
    """The normalisation ``cs`` would use on this framework, None if attack-free."""
    top = af.max_in_degree()
    if config.norm_override is not None:
        if config.norm_override < top:
            raise DivergentSeriesError(
                f"norm_override {config.norm_override:g} is below the largest"
                f" in-degree {top}"
            )
        return config.norm_override
    return float(top) if top > 0 else None


def _counting_degrees(af: ArgumentationFramework, spec: SemanticsSpec) -> list[float]:
    n = len(af.arguments)
    norm = counting_norm(af, spec.counting)
    if norm is None:
        return [1.0] * n
    index = {a: i for i, a in enumerate(af.arguments)}
    matrix = np.zeros((n, n))
    for s, t in af.attacks:
        matrix[index[t], index[s]] = 1.0
    system = np.eye(n) + (spec.counting.damping / norm) * matrix
    return np.linalg.solve(system, np.ones(n)).tolist()


def _step(kind: str, current: list[float], attacker_index: list[tuple[int, ...]]) -> list[float]:
    result = []
    for attackers in attacker_index:
        if kind == "hbs":
            result.append(1.0 / (1.0 + sum(current[i] for i in attackers)))
        elif kind == "car":
            k = len(attackers)
            if k == 0:
                result.append(1.0)
            else:
                mean = sum(current[i] for i in attackers) / k
                result.append(1.0 / (1.0 + k + mean))
        else:
            worst = max((current[i] for i in attackers), default=0.0)
            result.append(1.0 / (1.0 + worst))
    return result


def _fixed_point(
    af: ArgumentationFramework, spec: SemanticsSpec, initial_value: float
) -> list[float]:
    index = {a: i for i, a in enumerate(af.arguments)}
    attacker_index = [
        tuple(index[b] for b in af.attackers(a)) for a in af.arguments
    ]
    current = [float(initial_value)] * len(af.arguments)
    residual = float("inf")
    for _ in range(spec.max_iterations):
        updated = _step(spec.kind, current, attacker_index)
        residual = max(abs(x - y) for x, y in zip(updated, current)) if updated else 0.0
        current = updated
        if residual <= spec.tolerance:
            return current
    raise NonConvergenceError(spec.max_iterations, residual)


@lru_cache(maxsize=32768)
def _cached_degrees(af: ArgumentationFramework, spec: SemanticsSpec) -> Weighting:
    if spec.kind == "cs":
        values = _counting_degrees(af, spec)
    else:
        values = _fixed_point(af, spec, 1.0)
    return Weighting(dict(zip(af.arguments, values)))


def degrees(
    af: ArgumentationFramework,
    spec: SemanticsSpec,
    initial_value: float = 1.0,
) -> Weighting:
    """Acceptability degree of every argument under the chosen semantics.

    ``initial_value`` seeds the Picard iteration; any start in [0, 1] reaches
    the same fixed point, which the uniqueness tests exploit.  ``cs`` solves a
    linear system and ignores it.
    """
    if not af.arguments:
        raise ValueError("degrees need at least one argument")
    if not 0.0 <= initial_value <= 1.0:
        raise ValueError("initial_value must lie in [0, 1]")
    if initial_value == 1.0 or spec.kind == "cs":
        return _cached_degrees(af, spec)
    return Weighting(dict(zip(af.arguments, _fixed_point(af, spec, initial_value))))


def weighting_payload(
    af: ArgumentationFramework, spec: SemanticsSpec, weighting: Weighting
) -> dict:
    """JSON-ready view of a weighting, with the solver parameters used."""
    if spec.kind == "cs":
        norm = counting_norm(af, spec.counting)
        params: dict = {"alpha": spec.counting.damping, "norm": norm}
    else:
        params = {"tolerance": spec.tolerance, "max_iterations": spec.max_iterations}
    return {
        "semantics": spec.kind,
        "params": params,
        "degrees": weighting.as_dict(),
    }


# -- structural property checks -----------------------------------------


def check_independence(
    spec: SemanticsSpec,
    pairs: Iterable[tuple[ArgumentationFramework, ArgumentationFramework]],
    tolerance: float = CHECK_TOLERANCE,
) -> PrincipleVerdict:
    """Search disjoint pairs for a degree changed by joining the frameworks."""
    trials = 0
    for left, right in pairs:
        if set(left.arguments) & set(right.arguments):
            raise ValueError("independence pairs must have disjoint arguments")
        trials += 1
        combined = left.union(right)
        joined = degrees(combined, spec)
        for part in (left, right):
            alone = degrees(part, spec)
            for y in part.arguments:
                if abs(alone[y] - joined[y]) > tolerance:
                    witness = Witness(
                        frameworks=(left, right),
                        lhs=alone[y],
                        rhs=joined[y],
                        targets=(y,),
                        description="degree changed by a disjoint union",
                    )
                    return PrincipleVerdict(
                        principle="independence",
                        semantics=spec.kind,
                        status=COUNTEREXAMPLE,
                        trials=trials,
                        tolerance=tolerance,
                        witness=witness,
                    )
    return PrincipleVerdict(
        principle="independence",
        semantics=spec.kind,
        status=NO_COUNTEREXAMPLE,
        trials=trials,
        tolerance=tolerance,
    )


def check_directionality(
    spec: SemanticsSpec,
    instances: Iterable[tuple[ArgumentationFramework, Attack]],
    tolerance: float = CHECK_TOLERANCE,
) -> PrincipleVerdict:
    """Search attack additions for a degree change outside the target's reach."""
    trials = 0
    for af, attack in instances:
        source, target = attack
        if source not in af:
            raise UnknownArgumentError(source)
        if target not in af:
            raise UnknownArgumentError(target)
        if af.has_attack(source, target):
            raise ValueError(f"attack {attack!r} is already present")
        trials += 1
        augmented = ArgumentationFramework.of(af.arguments, af.attacks + (attack,))
        before = degrees(af, spec)
        after = degrees(augmented, spec)
        for y in af.arguments:
            if y == target or augmented.has_path(target, y):
                continue
            if abs(before[y] - after[y]) > tolerance:
                witness = Witness(
                    frameworks=(af, augmented),
                    lhs=before[y],
                    rhs=after[y],
                    targets=(y,),
                    attack=attack,
                    description="degree changed beyond the added attack's reach",
                )
                return PrincipleVerdict(
                    principle="directionality",
                    semantics=spec.kind,
                    status=COUNTEREXAMPLE,
                    trials=trials,
                    tolerance=tolerance,
                    witness=witness,
                )
    return PrincipleVerdict(
        principle="directionality",
        semantics=spec.kind,
        status=NO_COUNTEREXAMPLE,
        trials=trials,
        tolerance=tolerance,
    )


def check_attack_removal_monotonicity(
    spec: SemanticsSpec,
    corpus: Iterable[ArgumentationFramework],
    removal_cap: int = 3,
    tolerance: float = CHECK_TOLERANCE,
) -> PrincipleVerdict:
    """Search for an argument whose degree drops when attacks on it are removed."""
    trials = 0
    for af in corpus:
        base = degrees(af, spec)
        for a in af.arguments:
            incoming = af.attacks_on(a)
            for size in range(1, min(removal_cap, len(incoming)) + 1):
                for removed in combinations(incoming, size):
                    trials += 1
                    after = degrees(af.delete_attacks(removed), spec)
                    if base[a] > after[a] + tolerance:
                        witness = Witness(
                            frameworks=(af,),
                            lhs=base[a],
                            rhs=after[a],
                            targets=(a,),
                            removed_attacks=removed,
                            description="degree dropped after removing attacks",
                        )
                        return PrincipleVerdict(
                            principle="attack-removal-monotonicity",
                            semantics=spec.kind,
                            status=COUNTEREXAMPLE,
                            trials=trials,
                            tolerance=tolerance,
                            witness=witness,
                        )
    return PrincipleVerdict(
        principle="attack-removal-monotonicity",
        semantics=spec.kind,
        status=NO_COUNTEREXAMPLE,
        trials=trials,
        tolerance=tolerance,
    )
