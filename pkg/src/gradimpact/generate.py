"""Seeded random framework generation."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .framework import ArgumentationFramework


@dataclass(frozen=True)
class GeneratorConfig:
    """Parameters for drawing a random attack graph."""

    argument_count: int
    attack_probability: float
    allow_self_attacks: bool = False
    seed: int = 0

    def __post_init__(self) -> None:
        if self.argument_count < 1:
            raise ValueError("argument_count must be at least 1")
        if not 0.0 <= self.attack_probability <= 1.0:
            raise ValueError("attack_probability must lie in [0, 1]")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")


def random_af(config: GeneratorConfig) -> ArgumentationFramework:
    """Draw each ordered pair as an attack independently with the configured probability.

    Identical configurations always produce identical frameworks: the pair
    order is fixed and the generator is seeded.
    """
    names = sorted(f"a{i}" for i in range(1, config.argument_count + 1))
    rng = random.Random(config.seed)
    attacks = []
    for source in names:
        for target in names:
            if source == target and not config.allow_self_attacks:
                continue
            if rng.random() < config.attack_probability:
                attacks.append((source, target))
    return ArgumentationFramework.of(names, attacks)
