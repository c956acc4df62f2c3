"""Bijections between Dyck paths with parity-constrained peak heights and
restricted Motzkin paths, with exhaustive enumeration and cross-checks.
"""
from .paths import (
    BelowGround,
    ContainsFlat,
    DyckPath,
    InvalidCharacter,
    MotzkinPath,
    NotInImage,
    PathStats,
    PeakParityClass,
    PeakParityError,
    Step,
    UnbalancedPath,
    classify,
    decompose,
    parse_steps,
    peaks,
    render_steps,
    split_at_ground_downs,
    split_at_ground_flats,
    stats,
    validate_dyck,
    validate_motzkin,
)
from .trees import (
    Edge,
    EdgeColor,
    EdgeColoring,
    IllDefinedParity,
    InvalidMotzkinOutput,
    OrderedTree,
    color_edges,
    coloring_from_letters,
    coloring_to_letters,
    edge_parity,
    glove_to_dyck,
    glove_to_tree,
    relocate_reds,
    walk_to_motzkin,
)
from .bijections import (
    FirstStepNotFlat,
    InvalidExpansion,
    MapKind,
    UnexpectedUDPair,
    WrongParityClass,
    apply_map,
    explicit_a,
    explicit_b,
    explicit_map,
    phi_a,
    phi_b,
    psi_a,
    psi_b,
    rest,
    tirrell_a,
    tirrell_a_inv,
    tirrell_b,
    tirrell_b_inv,
)
from .enumeration import (
    ClaimViolation,
    CountRow,
    CountTable,
    PathClass,
    catalan,
    count_table,
    generate,
    lex_key,
    motzkin,
    riordan,
)
from .verify import CheckResult, format_report, run_verification

__version__ = "0.1.0"

__all__ = [
    "BelowGround",
    "CheckResult",
    "ClaimViolation",
    "ContainsFlat",
    "CountRow",
    "CountTable",
    "DyckPath",
    "Edge",
    "EdgeColor",
    "EdgeColoring",
    "FirstStepNotFlat",
    "IllDefinedParity",
    "InvalidCharacter",
    "InvalidExpansion",
    "InvalidMotzkinOutput",
    "MapKind",
    "MotzkinPath",
    "NotInImage",
    "OrderedTree",
    "PathClass",
    "PathStats",
    "PeakParityClass",
    "PeakParityError",
    "Step",
    "UnbalancedPath",
    "UnexpectedUDPair",
    "WrongParityClass",
    "apply_map",
    "catalan",
    "classify",
    "color_edges",
    "coloring_from_letters",
    "coloring_to_letters",
    "count_table",
    "decompose",
    "edge_parity",
    "explicit_a",
    "explicit_b",
    "explicit_map",
    "format_report",
    "generate",
    "glove_to_dyck",
    "glove_to_tree",
    "lex_key",
    "motzkin",
    "parse_steps",
    "peaks",
    "phi_a",
    "phi_b",
    "psi_a",
    "psi_b",
    "relocate_reds",
    "render_steps",
    "rest",
    "riordan",
    "run_verification",
    "split_at_ground_downs",
    "split_at_ground_flats",
    "stats",
    "tirrell_a",
    "tirrell_a_inv",
    "tirrell_b",
    "tirrell_b_inv",
    "validate_dyck",
    "validate_motzkin",
    "walk_to_motzkin",
]
