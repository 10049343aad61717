"""Reading and writing attack graphs in TGF, APX, JSON and DOT form.

All serializers emit sorted, newline-terminated text so that equal frameworks
always produce byte-identical output.
"""

from __future__ import annotations

import json
import re
from typing import Mapping

from .errors import (
    DuplicateArgumentError,
    DuplicateAttackError,
    FormatSyntaxError,
    InconsistentAnnotationError,
    MissingSeparatorError,
    UnknownEndpointError,
)
from .framework import ArgumentationFramework, Attack

FORMATS = ("tgf", "apx", "json", "dot")

_APX_STATEMENT = re.compile(
    r"arg\(\s*([^(),.\s%]+)\s*\)\s*\.|att\(\s*([^(),.\s%]+)\s*,\s*([^(),.\s%]+)\s*\)\s*\."
)


def parse_tgf(text: str) -> ArgumentationFramework:
    """Parse trivial graph format: node lines, a '#' line, then edge lines."""
    nodes: list[str] = []
    edges: list[Attack] = []
    seen_nodes: set[str] = set()
    seen_edges: set[Attack] = set()
    in_edges = False
    found_separator = False
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line == "#":
            if found_separator:
                raise FormatSyntaxError(number, raw)
            found_separator = True
            in_edges = True
            continue
        tokens = line.split()
        if not in_edges:
            if len(tokens) != 1:
                raise FormatSyntaxError(number, raw)
            (node,) = tokens
            if node in seen_nodes:
                raise DuplicateArgumentError(node)
            seen_nodes.add(node)
            nodes.append(node)
        else:
            if len(tokens) != 2:
                raise FormatSyntaxError(number, raw)
            source, target = tokens
            if source not in seen_nodes:
                raise UnknownEndpointError(source)
            if target not in seen_nodes:
                raise UnknownEndpointError(target)
            if (source, target) in seen_edges:
                raise DuplicateAttackError(source, target)
            seen_edges.add((source, target))
            edges.append((source, target))
    if not found_separator:
        raise MissingSeparatorError("no '#' separator line found")
    return ArgumentationFramework.of(nodes, edges)


def parse_apx(text: str) -> ArgumentationFramework:
    """Parse ASPARTIX facts: ``arg(id).`` and ``att(src,dst).`` statements."""
    arguments: list[str] = []
    attacks: list[tuple[int, str, str]] = []
    seen_args: set[str] = set()
    seen_attacks: set[Attack] = set()
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        position = 0
        for match in _APX_STATEMENT.finditer(line):
            if line[position : match.start()].strip():
                raise FormatSyntaxError(number, raw)
            position = match.end()
            if match.group(1) is not None:
                identifier = match.group(1)
                if identifier in seen_args:
                    raise DuplicateArgumentError(identifier)
                seen_args.add(identifier)
                arguments.append(identifier)
            else:
                source, target = match.group(2), match.group(3)
                if (source, target) in seen_attacks:
                    raise DuplicateAttackError(source, target)
                seen_attacks.add((source, target))
                attacks.append((number, source, target))
        rest = line[position:].strip()
        if rest and not rest.startswith("%"):
            raise FormatSyntaxError(number, raw)
    for _, source, target in attacks:
        if source not in seen_args:
            raise UnknownEndpointError(source)
        if target not in seen_args:
            raise UnknownEndpointError(target)
    return ArgumentationFramework.of(arguments, ((s, t) for _, s, t in attacks))


def _check_identifier(identifier: str, fmt: str) -> None:
    if fmt == "tgf" and (any(c.isspace() for c in identifier) or identifier == "#"):
        raise ValueError(f"identifier {identifier!r} cannot be written as TGF")
    if fmt == "apx" and not re.fullmatch(r"[^(),.\s%]+", identifier):
        raise ValueError(f"identifier {identifier!r} cannot be written as APX")


def _check_annotations(
    af: ArgumentationFramework,
    degrees: Mapping[str, float] | None,
    intensities: Mapping[Attack, float] | None,
) -> None:
    if degrees is not None and set(degrees) != set(af.arguments):
        raise InconsistentAnnotationError(
            "degree annotation does not cover the arguments exactly"
        )
    if intensities is not None and set(intensities) != set(af.attacks):
        raise InconsistentAnnotationError(
            "intensity annotation does not cover the attacks exactly"
        )


def _dot_quote(identifier: str) -> str:
    return '"' + identifier.replace("\\", "\\\\").replace('"', '\\"') + '"'


def serialize(
    af: ArgumentationFramework,
    fmt: str,
    *,
    degrees: Mapping[str, float] | None = None,
    intensities: Mapping[Attack, float] | None = None,
) -> str:
    """Render a framework in the given format.

    Optional annotations label nodes with degrees and edges with attack
    intensities; they are supported for ``dot`` and ``json`` only and must
    cover the framework exactly.
    """
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    if fmt in ("tgf", "apx") and (degrees is not None or intensities is not None):
        raise ValueError(f"annotations are not supported for {fmt!r}")
    _check_annotations(af, degrees, intensities)

    if fmt == "tgf":
        for a in af.arguments:
            _check_identifier(a, "tgf")
        lines = list(af.arguments) + ["#"] + [f"{s} {t}" for s, t in af.attacks]
        return "\n".join(lines) + "\n"

    if fmt == "apx":
        for a in af.arguments:
            _check_identifier(a, "apx")
        lines = [f"arg({a})." for a in af.arguments]
        lines += [f"att({s},{t})." for s, t in af.attacks]
        return "\n".join(lines) + "\n" if lines else ""

    if fmt == "json":
        payload: dict = af.to_dict()
        if degrees is not None:
            payload["degrees"] = {a: degrees[a] for a in af.arguments}
        if intensities is not None:
            payload["intensities"] = [
                [s, t, intensities[(s, t)]] for s, t in af.attacks
            ]
        return json.dumps(payload, sort_keys=True) + "\n"

    lines = ["digraph af {"]
    for a in af.arguments:
        if degrees is not None:
            esc = a.replace("\\", "\\\\").replace('"', '\\"')
            lines.append(f"  {_dot_quote(a)} [label=\"{esc}\\n{degrees[a]:.3f}\"];")
        else:
            lines.append(f"  {_dot_quote(a)};")
    for s, t in af.attacks:
        if intensities is not None:
            value = intensities[(s, t)]
            lines.append(
                f"  {_dot_quote(s)} -> {_dot_quote(t)} [label=\"{value:.3f}\"];"
            )
        else:
            lines.append(f"  {_dot_quote(s)} -> {_dot_quote(t)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse(text: str, fmt: str) -> ArgumentationFramework:
    """Parse ``text`` as the given input format (``tgf`` or ``apx``)."""
    if fmt == "tgf":
        return parse_tgf(text)
    if fmt == "apx":
        return parse_apx(text)
    raise ValueError(f"unknown input format {fmt!r}")
