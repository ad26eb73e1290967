"""Exact symbolic computation of Schur function expansions of Thom polynomials.

The package evaluates supersymmetric Schur functions over differences of
alphabets and computes Thom polynomials of map singularities by solving
their restriction-equation systems, with closed-form builders and golden
coefficient tables for cross-checking.
"""

from .algebra import (
    ExactSolveError,
    InconsistentError,
    LinearSystem,
    NonIntegralError,
    Polynomial,
    UnderdeterminedError,
    determinant,
    integer_rank,
    solve_exact,
    taylor_coeffs,
)
from .alphabets import Alphabet, AlphabetDiff, Letter, alphabet, b_alphabet, diff, letter
from .catalog import (
    RestrictionEquation,
    SingularityId,
    UnsupportedSingularityError,
    auto_vanishing,
    codim,
    local_algebra_dim,
    restriction_system,
    singularity,
)
from .closed_forms import (
    PascalStaircase,
    a3_consistency_checks,
    a3_h_initial,
    a3_quotient_u,
    a3_quotient_v,
    a3_staircase,
    a3_two_part,
    doubling_staircase,
    geometric_staircase,
    i22_initial,
    morin_one_part,
    staircase,
    staircase_from_series,
    staircase_sum,
    thom_a1,
    thom_a2,
    thom_a3,
    thom_i22,
    thom_iii23,
    thom_porteous,
)
from .golden import GoldenTable, GoldenTableError, builtin_names, diff_expansions, load_golden
from .partitions import (
    Partition,
    SchurExpansion,
    add_column,
    conjugate,
    contains,
    enumerate_candidates,
    h_part,
    hook_contained,
)
from .render import (
    expansion_json,
    expansion_json_text,
    expansion_text,
    parse_expansion_json,
    parse_expansion_text,
)
from .schur import (
    ShapeError,
    complete,
    evaluate_expansion,
    jacobi_trudi,
    multi_schur,
    resultant,
    resultant_sum_identity,
    schur,
    schur_factorized,
    schur_symmetrize,
)
from .solver import SolveReport, SolveTimeout, assemble, candidate_partitions, solve, verify

__version__ = "0.1.0"
