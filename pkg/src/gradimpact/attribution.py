"""Per-attack intensity attribution by coalition-averaged marginal effects.

The intensity of an attack (b, a) is the Shapley value of a coalitional game
played among the attacks on a: the worth of a coalition is the degree a
reaches once the coalition is removed from the framework.  Equivalently, the
intensity averages, over all orders of removing the attacks on a, the degree
change caused by removing (b, a) at its turn.

Targets with at most ``exact_indegree_cap`` attackers are enumerated exactly;
beyond the cap a seeded permutation sample estimates the same average.
"""

from __future__ import annotations

import hashlib
import math
import random
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Mapping

from .errors import ExactModeRequiredError, UnknownAttackError
from .framework import ArgumentationFramework, Attack
from .semantics import SemanticsSpec, degrees
from .verdicts import COUNTEREXAMPLE, NO_COUNTEREXAMPLE, PrincipleVerdict, Witness

EXACT_MODE = "exact"
SAMPLED_MODE = "sampled"


@dataclass(frozen=True)
class ShapleyConfig:
    """Exact-enumeration cap and sampling parameters."""

    exact_indegree_cap: int = 12
    sample_count: int = 2000
    seed: int = 0

    def __post_init__(self) -> None:
        if self.exact_indegree_cap < 0:
            raise ValueError("exact_indegree_cap must be non-negative")
        if self.sample_count < 1:
            raise ValueError("sample_count must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")


@dataclass(frozen=True)
class ShapleyMeasure(Mapping[Attack, float]):
    """Intensity of every attack, keyed by (source, target)."""

    entries: tuple[tuple[Attack, float], ...]
    mode: str

    @cached_property
    def _lookup(self) -> dict[Attack, float]:
        return dict(self.entries)

    def __getitem__(self, attack: Attack) -> float:
        try:
            return self._lookup[attack]
        except KeyError:
            raise UnknownAttackError(*attack) from None

    def __iter__(self) -> Iterator[Attack]:
        return iter(self._lookup)

    def __len__(self) -> int:
        return len(self.entries)

    def as_dict(self) -> dict[Attack, float]:
        return dict(self.entries)

    def to_payload(self, semantics: str) -> dict:
        return {
            "semantics": semantics,
            "mode": self.mode,
            "values": [
                {"source": s, "target": t, "s": v} for (s, t), v in self.entries
            ],
        }


def _coalition_degree(
    af: ArgumentationFramework,
    spec: SemanticsSpec,
    target: str,
    removed: tuple[Attack, ...],
) -> float:
    return degrees(af.delete_attacks(removed), spec)[target]


def _exact_values(
    af: ArgumentationFramework,
    spec: SemanticsSpec,
    target: str,
    incoming: tuple[Attack, ...],
) -> dict[Attack, float]:
    n = len(incoming)
    sigma: dict[int, float] = {}
    for mask in range(1 << n):
        removed = tuple(incoming[i] for i in range(n) if mask >> i & 1)
        sigma[mask] = _coalition_degree(af, spec, target, removed)
    factorial = math.factorial
    weights = [factorial(k) * factorial(n - k - 1) / factorial(n) for k in range(n)]
    values: dict[Attack, float] = {}
    for position, attack in enumerate(incoming):
        bit = 1 << position
        total = 0.0
        for mask in range(1 << n):
            if mask & bit:
                continue
            total += weights[mask.bit_count()] * (sigma[mask | bit] - sigma[mask])
        values[attack] = total
    return values


def _sample_seed(seed: int, attack: Attack) -> int:
    digest = hashlib.sha256(f"{seed}:{attack[0]}>{attack[1]}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def _sampled_value(
    af: ArgumentationFramework,
    spec: SemanticsSpec,
    target: str,
    incoming: tuple[Attack, ...],
    attack: Attack,
    config: ShapleyConfig,
) -> float:
    rng = random.Random(_sample_seed(config.seed, attack))
    order = list(incoming)
    total = 0.0
    for _ in range(config.sample_count):
        rng.shuffle(order)
        position = order.index(attack)
        before = tuple(sorted(order[:position]))
        total += _coalition_degree(
            af, spec, target, before + (attack,)
        ) - _coalition_degree(af, spec, target, before)
    return total / config.sample_count


def shapley_attack(
    af: ArgumentationFramework,
    spec: SemanticsSpec,
    attack: Attack,
    config: ShapleyConfig = ShapleyConfig(),
) -> float:
    """Intensity of a single attack, exact when the target's in-degree allows."""
    source, target = attack
    if not af.has_attack(source, target):
        raise UnknownAttackError(source, target)
    incoming = af.attacks_on(target)
    if len(incoming) <= config.exact_indegree_cap:
        return _exact_values(af, spec, target, incoming)[attack]
    return _sampled_value(af, spec, target, incoming, attack, config)


@lru_cache(maxsize=4096)
def _cached_shapley_all(
    af: ArgumentationFramework, spec: SemanticsSpec, config: ShapleyConfig
) -> ShapleyMeasure:
    values: dict[Attack, float] = {}
    sampled = False
    for target in af.arguments:
        incoming = af.attacks_on(target)
        if not incoming:
            continue
        if len(incoming) <= config.exact_indegree_cap:
            values.update(_exact_values(af, spec, target, incoming))
        else:
            sampled = True
            for attack in incoming:
                values[attack] = _sampled_value(
                    af, spec, target, incoming, attack, config
                )
    entries = tuple(sorted(values.items(), key=lambda kv: (kv[0][1], kv[0][0])))
    return ShapleyMeasure(
        entries=entries, mode=SAMPLED_MODE if sampled else EXACT_MODE
    )


def shapley_all(
    af: ArgumentationFramework,
    spec: SemanticsSpec,
    config: ShapleyConfig = ShapleyConfig(),
) -> ShapleyMeasure:
    """Intensities of every attack, sorted by target then source."""
    return _cached_shapley_all(af, spec, config)


def check_bounded_loss(
    af: ArgumentationFramework,
    spec: SemanticsSpec,
    config: ShapleyConfig = ShapleyConfig(),
    tolerance: float = 1e-9,
) -> PrincipleVerdict:
    """Search for an attack whose intensity magnitude exceeds its source's degree.

    Requires exact intensities: a sampled estimate could cross the bound by
    noise alone, so targets beyond the exact cap are rejected.
    """
    for target in af.arguments:
        indegree = af.in_degree(target)
        if indegree > config.exact_indegree_cap:
            raise ExactModeRequiredError(indegree, config.exact_indegree_cap)
    measure = shapley_all(af, spec, config)
    trials = 0
    scores = degrees(af, spec) if measure.entries else {}
    for (source, target), value in measure.entries:
        trials += 1
        if abs(value) > scores[source] + tolerance:
            witness = Witness(
                frameworks=(af,),
                lhs=abs(value),
                rhs=scores[source],
                targets=(target,),
                attack=(source, target),
                description="intensity magnitude exceeded the source's degree",
            )
            return PrincipleVerdict(
                principle="bounded-loss",
                semantics=spec.kind,
                status=COUNTEREXAMPLE,
                trials=trials,
                tolerance=tolerance,
                witness=witness,
            )
    return PrincipleVerdict(
        principle="bounded-loss",
        semantics=spec.kind,
        status=NO_COUNTEREXAMPLE,
        trials=trials,
        tolerance=tolerance,
    )
