"""Falsification audits for nine principles of impact measures.

Each principle states an equality or an existence claim about impact values.
The checkers search a corpus of frameworks for counterexamples: they derive
the instances a principle quantifies over (renamings, disjoint unions, attack
additions, automorphic argument pairs, subject sets), evaluate both sides,
and stop at the first gap beyond tolerance.  A verdict records the outcome,
the number of instances tried and, on failure, a replayable witness.

The principles:

* anonymity: impact is invariant under renaming the arguments
* independence: impact is unchanged by joining an unrelated framework
* balanced: set impact decomposes as the sum over a member split
* void: the empty set has zero impact
* directionality: impact is unchanged by attack additions that cannot
  reach the evaluated argument
* minimisation: subject members with no path to the evaluated argument
  can be dropped
* zero: a single argument with no path to the evaluated argument has
  zero impact
* symmetry: automorphic arguments receive mirrored impacts
* existence: every argument scored below one has some set with nonzero
  impact

A membership test, renaming instance or path premise treats each argument
as trivially reaching itself, so reflexive corner cases are excluded where
the statements would otherwise contradict the expected satisfaction pattern.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .attribution import ShapleyConfig
from .automorphisms import find_automorphisms
from .errors import IncompleteMatrixError, UnsupportedInstanceError
from .fixtures import chain_pair, disjoint_pair, fixture_frameworks, showcase_af
from .framework import ArgumentationFramework, Attack
from .generate import GeneratorConfig, random_af
from .impact import SeriesConfig, evaluate_impact
from .semantics import KINDS, SemanticsSpec, degrees
from .verdicts import COUNTEREXAMPLE, NO_COUNTEREXAMPLE, PrincipleVerdict, Witness

PRINCIPLES = (
    "anonymity",
    "independence",
    "balanced",
    "void",
    "directionality",
    "minimisation",
    "zero",
    "symmetry",
    "existence",
)

AUDIT_MEASURES = ("dv", "dv-original", "si")
RESTRICTED_SCOPE = "max-indegree>=2"

CorpusEntry = object


@dataclass(frozen=True)
class AuditConfig:
    """Corpus schedule and evaluation parameters for a full audit."""

    graph_count: int = 500
    size_range: tuple[int, int] = (2, 7)
    probability_range: tuple[float, float] = (0.3, 0.3)
    seed: int = 42
    tolerance: float = 1e-7
    measures: tuple[str, ...] = ("dv", "si")
    semantics: tuple[str, ...] = KINDS
    include_fixtures: bool = True
    query_budget: int = 3
    subset_cap: int = 3
    automorphism_cap: int = 9
    shapley: ShapleyConfig = field(default_factory=ShapleyConfig)
    series: SeriesConfig = field(default_factory=SeriesConfig)

    def __post_init__(self) -> None:
        if self.graph_count < 0:
            raise ValueError("graph_count must be non-negative")
        lo, hi = self.size_range
        if not 1 <= lo <= hi:
            raise ValueError("size_range must satisfy 1 <= low <= high")
        plo, phi = self.probability_range
        if not 0.0 <= plo <= phi <= 1.0:
            raise ValueError("probability_range must satisfy 0 <= low <= high <= 1")
        for m in self.measures:
            if m not in AUDIT_MEASURES:
                raise ValueError(f"unknown measure {m!r}")
        for s in self.semantics:
            if s not in KINDS:
                raise ValueError(f"unknown semantics {s!r}")
        if self.query_budget < 1:
            raise ValueError("query_budget must be at least 1")


def corpus_frameworks(config: AuditConfig) -> tuple[ArgumentationFramework, ...]:
    """The seeded random graphs an audit draws, without the fixtures."""
    rng = random.Random(f"corpus:{config.seed}")
    lo, hi = config.size_range
    plo, phi = config.probability_range
    out = []
    for i in range(config.graph_count):
        count = rng.randint(lo, hi)
        probability = plo if plo == phi else rng.uniform(plo, phi)
        out.append(
            random_af(
                GeneratorConfig(
                    argument_count=count,
                    attack_probability=probability,
                    allow_self_attacks=(i % 4 == 0),
                    seed=rng.randrange(2**32),
                )
            )
        )
    return tuple(out)


def fixture_entries(principle: str) -> tuple[CorpusEntry, ...]:
    """Bundled corpus entries for one principle, shaped instances included."""
    base: tuple[CorpusEntry, ...] = fixture_frameworks()
    if principle == "independence":
        return (disjoint_pair(),) + base
    if principle == "directionality":
        return (chain_pair(),) + base
    if principle == "balanced":
        return ((showcase_af(), ("a8",), "a10", "a4"),) + base
    return base


# -- evaluation context --------------------------------------------------


@dataclass(frozen=True)
class _Context:
    measure: str
    spec: SemanticsSpec
    tolerance: float
    seed: int
    queries: int
    subset_cap: int
    automorphism_cap: int
    shapley: ShapleyConfig
    series: SeriesConfig

    def value(
        self, af: ArgumentationFramework, subject: Iterable[str], target: str
    ) -> float:
        return evaluate_impact(
            self.measure, af, self.spec, subject, target,
            shapley_config=self.shapley, series=self.series,
        ).value

    def rng(self, label: str, index: int) -> random.Random:
        return random.Random(f"{self.seed}:{label}:{index}")

    def verdict(
        self,
        principle: str,
        trials: int,
        witness: Witness | None,
        scope: str = "all",
        notes: str = "",
    ) -> PrincipleVerdict:
        return PrincipleVerdict(
            principle=principle,
            semantics=self.spec.kind,
            status=NO_COUNTEREXAMPLE if witness is None else COUNTEREXAMPLE,
            trials=trials,
            tolerance=self.tolerance,
            measure=self.measure,
            witness=witness,
            scope=scope,
            notes=notes,
        )


def _random_subset(
    rng: random.Random, args: Sequence[str], probability: float = 0.4
) -> tuple[str, ...]:
    return tuple(a for a in args if rng.random() < probability)


def _subject_candidates(
    af: ArgumentationFramework, target: str, rng: random.Random, cap: int
) -> list[tuple[str, ...]]:
    if len(af.arguments) <= cap:
        args = af.arguments
        return [
            c
            for size in range(len(args) + 1)
            for c in combinations(args, size)
        ]
    out: list[tuple[str, ...]] = []
    attackers = af.attackers(target)
    if attackers:
        out.append(attackers)
        out.append((attackers[0],))
    upstream = [u for u in af.attack_structure(target) if u != target]
    out.extend((u,) for u in upstream[:3])
    out.append(_random_subset(rng, af.arguments))
    seen: set[tuple[str, ...]] = set()
    unique = []
    for c in out:
        c = tuple(sorted(set(c)))
        if c not in seen:
            seen.add(c)
            unique.append(c)
    return unique


def _attacked_first(af: ArgumentationFramework) -> list[str]:
    return sorted(af.arguments, key=lambda a: (-af.in_degree(a), a))


# -- per-principle searches ----------------------------------------------


def _check_anonymity(ctx, plain, shaped):
    trials = 0
    for i, af in enumerate(plain):
        rng = ctx.rng("anonymity", i)
        order = list(af.arguments)
        rng.shuffle(order)
        mapping = {original: f"m{j}" for j, original in enumerate(order)}
        renamed = af.rename(mapping)
        for _ in range(ctx.queries):
            target = rng.choice(af.arguments)
            subject = _random_subset(rng, af.arguments)
            image = tuple(sorted(mapping[x] for x in subject))
            trials += 1
            lhs = ctx.value(af, subject, target)
            rhs = ctx.value(renamed, image, mapping[target])
            if abs(lhs - rhs) > ctx.tolerance:
                witness = Witness(
                    frameworks=(af, renamed),
                    lhs=lhs,
                    rhs=rhs,
                    subjects=(subject, image),
                    targets=(target, mapping[target]),
                    mapping=tuple(sorted(mapping.items())),
                    description="impact changed under renaming",
                )
                return ctx.verdict("anonymity", trials, witness)
    return ctx.verdict("anonymity", trials, None)


def _check_independence(ctx, plain, shaped):
    pairs: list[tuple[ArgumentationFramework, ArgumentationFramework]] = list(shaped)
    for i in range(0, len(plain) - 1, 2):
        left, right = plain[i], plain[i + 1]
        pairs.append((left, right.rename({c: f"z{i}x{c}" for c in right.arguments})))
    trials = 0
    for i, (left, right) in enumerate(pairs):
        if set(left.arguments) & set(right.arguments):
            raise UnsupportedInstanceError(
                "independence pairs must have disjoint arguments"
            )
        combined = left.union(right)
        rng = ctx.rng("independence", i)
        for target in _attacked_first(left)[: ctx.queries]:
            for subject in _subject_candidates(left, target, rng, ctx.subset_cap):
                trials += 1
                lhs = ctx.value(left, subject, target)
                rhs = ctx.value(combined, subject, target)
                if abs(lhs - rhs) > ctx.tolerance:
                    witness = Witness(
                        frameworks=(left, right),
                        lhs=lhs,
                        rhs=rhs,
                        subjects=(subject,),
                        targets=(target,),
                        description="impact changed by a disjoint union",
                    )
                    return ctx.verdict("independence", trials, witness)
    return ctx.verdict("independence", trials, None)


def _balanced_gap(ctx, af, subject, extra, target):
    lhs = ctx.value(af, subject, target) + ctx.value(af, (extra,), target)
    rhs = ctx.value(af, tuple(sorted(subject + (extra,))), target)
    return lhs, rhs


def _check_balanced(ctx, plain, shaped):
    trials = 0
    probes: list[tuple[ArgumentationFramework, tuple[str, ...], str, str]] = []
    for af, subject, extra, target in shaped:
        subject = tuple(sorted(set(subject)))
        members = set(af.arguments)
        if (
            not set(subject) <= members
            or extra not in members
            or extra in subject
            or target not in members
        ):
            raise UnsupportedInstanceError("balanced instance is not well-formed")
        probes.append((af, subject, extra, target))
    for i, af in enumerate(plain):
        rng = ctx.rng("balanced", i)
        anchor = _attacked_first(af)[0]
        attackers = af.attackers(anchor)
        if attackers:
            subject = (attackers[0],)
            extra = next(
                (
                    c
                    for c in af.arguments
                    if c not in subject and c != anchor and af.has_path(c, anchor)
                ),
                None,
            )
            if extra is not None:
                probes.append((af, subject, extra, anchor))
        for _ in range(ctx.queries):
            target = rng.choice(af.arguments)
            subject = _random_subset(rng, af.arguments)
            pool = [c for c in af.arguments if c not in subject]
            if not pool:
                continue
            probes.append((af, subject, rng.choice(pool), target))
    for af, subject, extra, target in probes:
        trials += 1
        lhs, rhs = _balanced_gap(ctx, af, subject, extra, target)
        if abs(lhs - rhs) > ctx.tolerance:
            witness = Witness(
                frameworks=(af,),
                lhs=lhs,
                rhs=rhs,
                subjects=(subject, (extra,), tuple(sorted(subject + (extra,)))),
                targets=(target,),
                description="impact of the union differs from the sum of the split",
            )
            return ctx.verdict("balanced", trials, witness)
    return ctx.verdict("balanced", trials, None)


def _check_void(ctx, plain, shaped):
    trials = 0
    for af in plain:
        for target in af.arguments:
            trials += 1
            value = ctx.value(af, (), target)
            if abs(value) > ctx.tolerance:
                witness = Witness(
                    frameworks=(af,),
                    lhs=value,
                    rhs=0.0,
                    subjects=((),),
                    targets=(target,),
                    description="empty set has nonzero impact",
                )
                return ctx.verdict("void", trials, witness)
    return ctx.verdict("void", trials, None)


def _check_directionality(ctx, plain, shaped):
    instances: list[tuple[ArgumentationFramework, Attack]] = list(shaped)
    for af in plain:
        if not af.attacks:
            continue
        # Removing an attack into a top in-degree target perturbs the
        # counting normalisation, which is where violations hide.
        attack = sorted(af.attacks, key=lambda c: (-af.in_degree(c[1]), c))[0]
        instances.append((af.delete_attacks([attack]), attack))
    trials = 0
    for i, (base, attack) in enumerate(instances):
        source, entry = attack
        if source not in base or entry not in base or base.has_attack(source, entry):
            raise UnsupportedInstanceError(
                "directionality instance needs an addable attack"
            )
        augmented = ArgumentationFramework.of(base.arguments, base.attacks + (attack,))
        rng = ctx.rng("directionality", i)
        eligible = [
            y
            for y in base.arguments
            if y != entry and not augmented.has_path(entry, y)
        ]
        for y in eligible[: ctx.queries]:
            for subject in _subject_candidates(augmented, y, rng, ctx.subset_cap):
                trials += 1
                lhs = ctx.value(base, subject, y)
                rhs = ctx.value(augmented, subject, y)
                if abs(lhs - rhs) > ctx.tolerance:
                    witness = Witness(
                        frameworks=(base, augmented),
                        lhs=lhs,
                        rhs=rhs,
                        subjects=(subject,),
                        targets=(y,),
                        attack=attack,
                        description="impact changed beyond the added attack's reach",
                    )
                    return ctx.verdict("directionality", trials, witness)
    return ctx.verdict("directionality", trials, None)


def _check_minimisation(ctx, plain, shaped):
    trials = 0
    for i, af in enumerate(plain):
        rng = ctx.rng("minimisation", i)
        eligible = [
            (a, x)
            for a in af.arguments
            for x in af.arguments
            if x != a and not af.has_path(x, a)
        ]
        for a, x in eligible[: ctx.queries]:
            padding = _random_subset(
                rng, [c for c in af.arguments if c != x], probability=0.3
            )
            for subject in {(x,), tuple(sorted(padding + (x,)))}:
                reduced = tuple(c for c in subject if c != x)
                trials += 1
                lhs = ctx.value(af, subject, a)
                rhs = ctx.value(af, reduced, a)
                if abs(lhs - rhs) > ctx.tolerance:
                    witness = Witness(
                        frameworks=(af,),
                        lhs=lhs,
                        rhs=rhs,
                        subjects=(subject, reduced),
                        targets=(a,),
                        description=f"dropping pathless member {x!r} changed the impact",
                    )
                    return ctx.verdict("minimisation", trials, witness)
    return ctx.verdict("minimisation", trials, None)


def _check_zero(ctx, plain, shaped):
    trials = 0
    for af in plain:
        eligible = [
            (x, a)
            for x in af.arguments
            for a in af.arguments
            if not af.has_path(x, a)
        ]
        for x, a in eligible[: 2 * ctx.queries + 2]:
            trials += 1
            value = ctx.value(af, (x,), a)
            if abs(value) > ctx.tolerance:
                witness = Witness(
                    frameworks=(af,),
                    lhs=value,
                    rhs=0.0,
                    subjects=((x,),),
                    targets=(a,),
                    description="pathless argument has nonzero impact",
                )
                return ctx.verdict("zero", trials, witness)
    return ctx.verdict("zero", trials, None)


def _check_symmetry(ctx, plain, shaped):
    trials = 0
    instances = 0
    skipped = 0
    for i, af in enumerate(plain):
        rng = ctx.rng("symmetry", i)
        used_here = 0
        for a, b in combinations(af.arguments, 2):
            shared = sorted(
                set(af.attack_structure(a)) | set(af.attack_structure(b))
            )
            if len(shared) > ctx.automorphism_cap:
                skipped += 1
                continue
            autos = find_automorphisms(
                af, shared, fixing=((a, b), (b, a)), cap=ctx.automorphism_cap
            )
            if not autos:
                continue
            f = autos[0]
            instances += 1
            members = set(shared)
            for _ in range(2):
                subject = _random_subset(rng, af.arguments)
                projected = tuple(
                    sorted({f[u] for u in subject if u in members})
                )
                trials += 1
                lhs = ctx.value(af, subject, a)
                rhs = ctx.value(af, projected, b)
                if abs(lhs - rhs) > ctx.tolerance:
                    witness = Witness(
                        frameworks=(af,),
                        lhs=lhs,
                        rhs=rhs,
                        subjects=(subject, projected),
                        targets=(a, b),
                        mapping=tuple(sorted(f.items())),
                        description="automorphic arguments received different impacts",
                    )
                    return ctx.verdict("symmetry", trials, witness)
            used_here += 1
            if used_here >= 2:
                break
    notes = f"automorphism instances: {instances}"
    if skipped:
        notes += f"; restrictions over cap skipped: {skipped}"
    return ctx.verdict("symmetry", trials, None, notes=notes)


def _existence_witness(ctx, af, target) -> Witness | None:
    if ctx.measure in ("dv", "dv-original"):
        candidates = [tuple(af.arguments)]
        attackers = af.attackers(target)
        if attackers:
            candidates.append(attackers)
            candidates.extend((b,) for b in attackers)
    else:
        # Set impacts decompose over members, so vanishing singletons decide.
        candidates = [(x,) for x in af.arguments]
    for subject in candidates:
        if abs(ctx.value(af, subject, target)) > ctx.tolerance:
            return None
    return Witness(
        frameworks=(af,),
        lhs=0.0,
        rhs=0.0,
        subjects=tuple(candidates),
        targets=(target,),
        description="no searched set had nonzero impact despite a reduced degree",
    )


def _has_shared_max_indegree(af: ArgumentationFramework) -> bool:
    top = af.max_in_degree()
    return sum(1 for a in af.arguments if af.in_degree(a) == top) >= 2


def _check_existence(ctx, plain, shaped):
    split = ctx.measure == "si" and ctx.spec.kind == "cs"
    main_trials = side_trials = 0
    main_witness: Witness | None = None
    side_witness: Witness | None = None
    for af in plain:
        scores = degrees(af, ctx.spec)
        in_main = not split or _has_shared_max_indegree(af)
        for target in af.arguments:
            if scores[target] >= 1.0 - ctx.tolerance:
                continue
            if in_main:
                main_trials += 1
                if main_witness is None:
                    main_witness = _existence_witness(ctx, af, target)
            else:
                side_trials += 1
                if side_witness is None:
                    side_witness = _existence_witness(ctx, af, target)
    if not split:
        return ctx.verdict("existence", main_trials, main_witness)
    side_status = (
        "no counterexample" if side_witness is None else "counterexample found"
    )
    notes = (
        f"outside the scope, on graphs with a unique maximum in-degree:"
        f" {side_trials} premises, {side_status}"
    )
    return ctx.verdict(
        "existence", main_trials, main_witness, scope=RESTRICTED_SCOPE, notes=notes
    )


_CHECKS = {
    "anonymity": _check_anonymity,
    "independence": _check_independence,
    "balanced": _check_balanced,
    "void": _check_void,
    "directionality": _check_directionality,
    "minimisation": _check_minimisation,
    "zero": _check_zero,
    "symmetry": _check_symmetry,
    "existence": _check_existence,
}


def _split_corpus(principle: str, corpus: Iterable[CorpusEntry]):
    plain: list[ArgumentationFramework] = []
    shaped: list[tuple] = []
    for entry in corpus:
        if isinstance(entry, ArgumentationFramework):
            plain.append(entry)
            continue
        if isinstance(entry, tuple):
            if (
                principle == "independence"
                and len(entry) == 2
                and all(isinstance(e, ArgumentationFramework) for e in entry)
            ):
                shaped.append(entry)
                continue
            if (
                principle == "directionality"
                and len(entry) == 2
                and isinstance(entry[0], ArgumentationFramework)
                and isinstance(entry[1], tuple)
                and len(entry[1]) == 2
            ):
                shaped.append(entry)
                continue
            if (
                principle == "balanced"
                and len(entry) == 4
                and isinstance(entry[0], ArgumentationFramework)
            ):
                shaped.append(entry)
                continue
        raise UnsupportedInstanceError(
            f"corpus entry of type {type(entry).__name__} does not fit {principle!r}"
        )
    return plain, shaped


def check_principle(
    principle: str,
    measure: str,
    spec: SemanticsSpec,
    corpus: Iterable[CorpusEntry],
    *,
    tolerance: float = 1e-7,
    seed: int = 0,
    query_budget: int = 3,
    subset_cap: int = 3,
    automorphism_cap: int = 9,
    shapley_config: ShapleyConfig | None = None,
    series: SeriesConfig | None = None,
) -> PrincipleVerdict:
    """Search a corpus for counterexamples to one principle."""
    if principle not in PRINCIPLES:
        raise ValueError(f"unknown principle {principle!r}")
    if measure not in AUDIT_MEASURES:
        raise ValueError(f"unknown measure {measure!r}")
    plain, shaped = _split_corpus(principle, corpus)
    ctx = _Context(
        measure=measure,
        spec=spec,
        tolerance=tolerance,
        seed=seed,
        queries=query_budget,
        subset_cap=subset_cap,
        automorphism_cap=automorphism_cap,
        shapley=shapley_config or ShapleyConfig(),
        series=series or SeriesConfig(),
    )
    return _CHECKS[principle](ctx, plain, shaped)


# -- full audits ---------------------------------------------------------


@dataclass(frozen=True)
class AuditResult:
    """All verdicts of one audit run, with rendering helpers."""

    config: AuditConfig
    verdicts: tuple[PrincipleVerdict, ...]

    def cell(self, principle: str, measure: str, semantics: str) -> PrincipleVerdict:
        for v in self.verdicts:
            if (
                v.principle == principle
                and v.measure == measure
                and v.semantics == semantics
            ):
                return v
        raise KeyError((principle, measure, semantics))

    def to_dict(self) -> dict:
        return {
            "config": {
                "graph_count": self.config.graph_count,
                "size_range": list(self.config.size_range),
                "probability_range": list(self.config.probability_range),
                "seed": self.config.seed,
                "tolerance": self.config.tolerance,
                "measures": list(self.config.measures),
                "semantics": list(self.config.semantics),
                "include_fixtures": self.config.include_fixtures,
            },
            "matrix": [v.to_dict() for v in self.verdicts],
        }

    def render_text(self) -> str:
        columns = [
            (measure, semantics)
            for semantics in self.config.semantics
            for measure in self.config.measures
        ]
        header = ["principle"] + [f"{m}*{s}" for m, s in columns]
        rows = [header]
        scoped = False
        for principle in PRINCIPLES:
            row = [principle]
            for measure, semantics in columns:
                v = self.cell(principle, measure, semantics)
                mark = "✓" if v.passed else "✗"
                if v.scope != "all":
                    mark += "'"
                    scoped = True
                row.append(mark)
            rows.append(row)
        widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
        lines = [
            "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip()
            for row in rows
        ]
        if scoped:
            lines.append(
                "' restricted to graphs where at least two arguments attain"
                " the maximum in-degree"
            )
        return "\n".join(lines) + "\n"


def audit(config: AuditConfig = AuditConfig()) -> AuditResult:
    """Run every configured principle, measure and semantics over one corpus."""
    base = corpus_frameworks(config)
    verdicts = []
    for principle in PRINCIPLES:
        entries: tuple[CorpusEntry, ...] = base
        if config.include_fixtures:
            entries = fixture_entries(principle) + base
        for semantics in config.semantics:
            spec = SemanticsSpec(semantics)
            for measure in config.measures:
                verdicts.append(
                    check_principle(
                        principle,
                        measure,
                        spec,
                        entries,
                        tolerance=config.tolerance,
                        seed=config.seed,
                        query_budget=config.query_budget,
                        subset_cap=config.subset_cap,
                        automorphism_cap=config.automorphism_cap,
                        shapley_config=config.shapley,
                        series=config.series,
                    )
                )
    return AuditResult(config=config, verdicts=tuple(verdicts))


def expected_status(principle: str, measure: str, semantics: str) -> str:
    """The published satisfaction pattern for a cell."""
    if principle in ("independence", "directionality"):
        return COUNTEREXAMPLE if semantics == "cs" else NO_COUNTEREXAMPLE
    if principle == "balanced":
        return COUNTEREXAMPLE if measure in ("dv", "dv-original") else NO_COUNTEREXAMPLE
    return NO_COUNTEREXAMPLE


def compare_with_expected(result: AuditResult) -> list[str]:
    """Mismatch descriptions between an audit and the published pattern."""
    problems = []
    for v in result.verdicts:
        wanted = expected_status(v.principle, v.measure, v.semantics)
        if v.status != wanted:
            problems.append(
                f"{v.principle} under {v.measure}*{v.semantics}:"
                f" expected {wanted}, audit found {v.status}"
            )
    return problems


_IMPLICATION_RULES = (
    (("anonymity", "directionality", "minimisation", "independence"), "symmetry"),
    (("zero", "balanced"), "minimisation"),
    (("void", "minimisation"), "zero"),
)


def crosscheck_implications(
    matrix: AuditResult | Iterable[PrincipleVerdict],
) -> list[dict]:
    """Report cells that contradict the proven implications between principles.

    Each rule says: when every premise principle has no counterexample, the
    conclusion principle cannot have one.  Missing cells make the check
    impossible and raise.
    """
    verdicts = matrix.verdicts if isinstance(matrix, AuditResult) else tuple(matrix)
    cells: dict[tuple[str, str, str], str] = {}
    for v in verdicts:
        cells[(v.measure or "", v.semantics, v.principle)] = v.status
    pairs = sorted({(m, s) for m, s, _ in cells})
    issues = []
    for measure, semantics in pairs:
        for premises, conclusion in _IMPLICATION_RULES:
            statuses = {}
            for principle in premises + (conclusion,):
                key = (measure, semantics, principle)
                if key not in cells:
                    raise IncompleteMatrixError(
                        f"matrix lacks {principle!r} for {measure}*{semantics}"
                    )
                statuses[principle] = cells[key]
            if statuses[conclusion] == COUNTEREXAMPLE and all(
                statuses[p] == NO_COUNTEREXAMPLE for p in premises
            ):
                issues.append(
                    {
                        "measure": measure,
                        "semantics": semantics,
                        "premises": list(premises),
                        "conclusion": conclusion,
                    }
                )
    return issues
