"""Finite multiplicative lattices, S-prime elements and Oka/Ako families."""

from .catalog import builtin, search_multiplications
from .errors import MultLatError
from .families import (
    ElementFamily,
    build_named_family,
    is_s_ako,
    is_s_oka,
    is_spr_oka,
    max_complement,
    structural_flags,
)
from .lattice import FiniteLattice, build_lattice
from .mult import (
    MultLattice,
    classify_multiplication,
    element_predicates,
    meet_multiplication,
    residual,
    star,
)
from .principle import (
    TheoremReport,
    check_converse_failure,
    check_s_pep,
    check_s_peps,
    exhaustive_audit,
    reports_to_json,
    reports_to_text,
    run_theorem_suite,
    sampled_audit,
)
from .sprime import (
    MClosedSet,
    enumerate_mclosed,
    is_prime,
    is_sprime,
    spec_s,
    trivial_set,
    validate_mclosed,
)
from .verdict import Verdict
from .zn import crosscheck, ideal_lattice, residue_sets

__all__ = [
    "ElementFamily",
    "FiniteLattice",
    "MClosedSet",
    "MultLatError",
    "MultLattice",
    "TheoremReport",
    "Verdict",
    "build_lattice",
    "build_named_family",
    "builtin",
    "check_converse_failure",
    "check_s_pep",
    "check_s_peps",
    "classify_multiplication",
    "crosscheck",
    "element_predicates",
    "enumerate_mclosed",
    "exhaustive_audit",
    "ideal_lattice",
    "is_prime",
    "is_s_ako",
    "is_s_oka",
    "is_spr_oka",
    "is_sprime",
    "max_complement",
    "meet_multiplication",
    "reports_to_json",
    "reports_to_text",
    "residual",
    "residue_sets",
    "run_theorem_suite",
    "sampled_audit",
    "search_multiplications",
    "spec_s",
    "star",
    "structural_flags",
    "trivial_set",
    "validate_mclosed",
]
