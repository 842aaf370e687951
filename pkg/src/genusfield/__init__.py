"""Genus fields of Q(zeta_{2^m}, sqrt(d)) for supported square-free d.

Supported d: square-free integers whose prime divisors are all congruent to
9 (mod 16), 5 (mod 8) or 3 (mod 8).  The package classifies the divisors,
dispatches onto one of 15 construction cases, solves the quadratic-form
identities the case requires, and independently verifies the result.
"""

from .arith import Factorization, factor_squarefree, is_prime, jacobi, mod_pow, quartic_symbol_two
from .classify import CaseSignature, PrimeClass, classify_prime, dispatch_case, make_signature, sub_branch
from .config import DEFAULT_CONFIG, SolverConfig
from .errors import (
    Degenerate,
    GenusFieldError,
    InternalContradiction,
    NotCoveredError,
    NotSquareFree,
    UnsupportedPrime,
)
from .genus import (
    GeneratorElement,
    GenusField,
    build_generators,
    construct,
    expected_rank,
    field_description,
    lift_to_level,
    parse_generator_display,
)
from .represent import Representation, all_representations, cornacchia, solve_alpha, solve_gamma, solve_pi1, solve_pi2, solve_pi3
from .verify import (
    VerificationReport,
    brute_force_subset_oracle,
    check_ideal_square,
    full_report,
    independence_gf2,
    is_square_mod4,
    norm_to_q,
)

__version__ = "0.1.0"

__all__ = [
    "CaseSignature",
    "DEFAULT_CONFIG",
    "Degenerate",
    "Factorization",
    "GeneratorElement",
    "GenusField",
    "GenusFieldError",
    "InternalContradiction",
    "NotCoveredError",
    "NotSquareFree",
    "PrimeClass",
    "Representation",
    "SolverConfig",
    "UnsupportedPrime",
    "VerificationReport",
    "all_representations",
    "brute_force_subset_oracle",
    "build_generators",
    "check_ideal_square",
    "classify_prime",
    "construct",
    "cornacchia",
    "dispatch_case",
    "expected_rank",
    "factor_squarefree",
    "field_description",
    "full_report",
    "independence_gf2",
    "is_prime",
    "is_square_mod4",
    "jacobi",
    "lift_to_level",
    "make_signature",
    "mod_pow",
    "norm_to_q",
    "parse_generator_display",
    "quartic_symbol_two",
    "solve_alpha",
    "solve_gamma",
    "solve_pi1",
    "solve_pi2",
    "solve_pi3",
    "sub_branch",
]
