"""Acceptability degrees, attack intensities and impact measures for attack graphs."""

from .attribution import (
    ShapleyConfig,
    ShapleyMeasure,
    check_bounded_loss,
    shapley_all,
    shapley_attack,
)
from .automorphisms import find_automorphisms
from .errors import (
    DivergenceError,
    DivergentSeriesError,
    DuplicateArgumentError,
    DuplicateAttackError,
    ExactModeRequiredError,
    FormatSyntaxError,
    GradimpactError,
    IncompleteMatrixError,
    InconsistentAnnotationError,
    MissingSeparatorError,
    NonConvergenceError,
    ParseError,
    TooLargeError,
    UnknownArgumentError,
    UnknownAttackError,
    UnsupportedInstanceError,
)
from .formats import parse, parse_apx, parse_tgf, serialize
from .framework import ArgumentationFramework, Attack
from .generate import GeneratorConfig, random_af
from .impact import (
    ImpactValue,
    SeriesConfig,
    evaluate_impact,
    imp_dv,
    imp_dv_original,
    imp_si,
    imp_si_single,
    impact_payload,
)
from .principles import (
    AuditConfig,
    AuditResult,
    PRINCIPLES,
    audit,
    check_principle,
    compare_with_expected,
    corpus_frameworks,
    crosscheck_implications,
    expected_status,
    fixture_entries,
)
from .semantics import (
    CountingConfig,
    KINDS,
    SemanticsSpec,
    Weighting,
    check_attack_removal_monotonicity,
    check_directionality,
    check_independence,
    counting_norm,
    degrees,
    weighting_payload,
)
from .verdicts import COUNTEREXAMPLE, NO_COUNTEREXAMPLE, PrincipleVerdict, Witness

__version__ = "0.1.0"

__all__ = [
    "ArgumentationFramework",
    "Attack",
    "AuditConfig",
    "AuditResult",
    "COUNTEREXAMPLE",
    "CountingConfig",
    "DivergenceError",
    "DivergentSeriesError",
    "DuplicateArgumentError",
    "DuplicateAttackError",
    "ExactModeRequiredError",
    "FormatSyntaxError",
    "GeneratorConfig",
    "GradimpactError",
    "ImpactValue",
    "IncompleteMatrixError",
    "InconsistentAnnotationError",
    "KINDS",
    "MissingSeparatorError",
    "NO_COUNTEREXAMPLE",
    "NonConvergenceError",
    "PRINCIPLES",
    "ParseError",
    "PrincipleVerdict",
    "SemanticsSpec",
    "SeriesConfig",
    "ShapleyConfig",
    "ShapleyMeasure",
    "TooLargeError",
    "UnknownArgumentError",
    "UnknownAttackError",
    "UnsupportedInstanceError",
    "Weighting",
    "Witness",
    "audit",
    "check_attack_removal_monotonicity",
    "check_bounded_loss",
    "check_directionality",
    "check_independence",
    "check_principle",
    "compare_with_expected",
    "corpus_frameworks",
    "counting_norm",
    "crosscheck_implications",
    "degrees",
    "evaluate_impact",
    "expected_status",
    "find_automorphisms",
    "fixture_entries",
    "imp_dv",
    "imp_dv_original",
    "imp_si",
    "imp_si_single",
    "impact_payload",
    "parse",
    "parse_apx",
    "parse_tgf",
    "random_af",
    "serialize",
    "shapley_all",
    "shapley_attack",
    "weighting_payload",
]
