"""Bundled frameworks that exercise known edge cases.

These small graphs are folded into every audit corpus.  Each one pins down a
behaviour that random sampling could miss: a hub whose attackers interact at
a distance, a counting-semantics normalisation jump, a disjoint union that
shifts counting degrees, a fan with interchangeable wings, and a self-attack.
"""

from __future__ import annotations

from .framework import ArgumentationFramework, Attack


def showcase_af() -> ArgumentationFramework:
    """Eleven arguments around a triply-attacked hub, with cycles upstream."""
    return ArgumentationFramework.of(
        [f"a{i}" for i in range(1, 12)],
        [
            ("a1", "a2"),
            ("a2", "a1"),
            ("a1", "a3"),
            ("a2", "a3"),
            ("a3", "a4"),
            ("a5", "a4"),
            ("a8", "a4"),
            ("a6", "a5"),
            ("a9", "a8"),
            ("a8", "a7"),
            ("a9", "a10"),
            ("a10", "a9"),
        ],
    )


def chain_pair() -> tuple[ArgumentationFramework, Attack]:
    """A three-argument graph and an attack addition that raises the top in-degree."""
    before = ArgumentationFramework.of(
        ["a1", "a2", "a3"], [("a1", "a2"), ("a1", "a3")]
    )
    return before, ("a2", "a3")


def disjoint_pair() -> tuple[ArgumentationFramework, ArgumentationFramework]:
    """Two unrelated graphs whose union raises the top in-degree."""
    left = ArgumentationFramework.of(["b1", "b2"], [("b2", "b1")])
    right = ArgumentationFramework.of(
        ["c1", "c2", "c3"], [("c1", "c2"), ("c3", "c2")]
    )
    return left, right


def fan_af() -> ArgumentationFramework:
    """Two targets sharing a middle attacker, flanked by symmetric wings."""
    return ArgumentationFramework.of(
        ["m", "t1", "t2", "w1", "w2"],
        [("w1", "t1"), ("m", "t1"), ("m", "t2"), ("w2", "t2")],
    )


def selfloop_af() -> ArgumentationFramework:
    """A single self-attacking argument."""
    return ArgumentationFramework.of(["a"], [("a", "a")])


def fixture_frameworks() -> tuple[ArgumentationFramework, ...]:
    """The bundled graphs, in the order audits fold them in."""
    before, attack = chain_pair()
    after = ArgumentationFramework.of(before.arguments, before.attacks + (attack,))
    left, right = disjoint_pair()
    return (showcase_af(), before, after, left, right, fan_af(), selfloop_af())
