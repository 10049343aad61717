"""Exhaustive automorphism search on small restrictions of a framework."""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import TooLargeError, UnknownArgumentError
from .framework import ArgumentationFramework

DEFAULT_CAP = 9


def find_automorphisms(
    af: ArgumentationFramework,
    restricted_to: Iterable[str],
    fixing: Iterable[tuple[str, str]] = (),
    cap: int = DEFAULT_CAP,
) -> list[dict[str, str]]:
    """All attack-preserving permutations of a restriction, in a fixed order.

    A permutation f qualifies when (u, v) is an attack iff (f(u), f(v)) is,
    for every pair drawn from the restriction.  ``fixing`` pins chosen
    arguments to chosen images; unsatisfiable pins yield an empty list.
    The search is exhaustive, so the restriction size is capped.
    """
    domain = sorted(set(restricted_to))
    for a in domain:
        if a not in af:
            raise UnknownArgumentError(a)
    if len(domain) > cap:
        raise TooLargeError(len(domain), cap)

    members = set(domain)
    edges = {(s, t) for s, t in af.attacks if s in members and t in members}
    pinned: dict[str, str] = {}
    for source, image in fixing:
        if source not in members or image not in members:
            raise UnknownArgumentError(source if source not in members else image)
        if pinned.get(source, image) != image:
            return []
        pinned[source] = image
    if len(set(pinned.values())) != len(pinned):
        return []

    def signature(v: str) -> tuple[int, int, bool]:
        indeg = sum(1 for s, t in edges if t == v)
        outdeg = sum(1 for s, t in edges if s == v)
        return (indeg, outdeg, (v, v) in edges)

    signatures = {v: signature(v) for v in domain}
    results: list[dict[str, str]] = []
    assignment: dict[str, str] = {}
    used: set[str] = set()

    def consistent(v: str, image: str) -> bool:
        for u, fu in assignment.items():
            if ((u, v) in edges) != ((fu, image) in edges):
                return False
            if ((v, u) in edges) != ((image, fu) in edges):
                return False
        return True

    def extend(position: int) -> None:
        if position == len(domain):
            results.append(dict(assignment))
            return
        v = domain[position]
        if v in pinned:
            candidates = [pinned[v]]
        else:
            candidates = domain
        for image in candidates:
            if image in used or signatures[image] != signatures[v]:
                continue
            if not consistent(v, image):
                continue
            assignment[v] = image
            used.add(image)
            extend(position + 1)
            used.discard(image)
            del assignment[v]

    extend(0)
    return results
