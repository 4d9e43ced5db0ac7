"""groupeq: equation solvability over finite groups as formal languages.

The central object is the language of solvable equations: words over a
group's generators and formal variables x1..xn that evaluate to the
identity for some assignment.  For a finite group that language is decided
by a deterministic automaton whose states are value vectors over all
tuples; this package implements that decision procedure, an independent
exhaustive solver it is validated against, an oracle-driven dovetailing
search that needs only a word-problem oracle, and pumping-lemma refutation
machinery for ratio languages a^m b^n.
"""

from .brute import SolutionReport, enumerate_language, solve_brute
from .dfa import (
    Dfa,
    SolverState,
    build_reachable_dfa,
    export_dfa,
    initial_state,
    is_accepting,
    membership,
    minimize_dfa,
    step,
)
from .dovetail import (
    Answer,
    DovetailResult,
    dovetail_solve,
    finite_group_oracle,
    free_group_oracle,
)
from .errors import (
    CapacityError,
    EquationSyntaxError,
    GeneratingSetError,
    GroupEqError,
    GroupParseError,
    InvalidGroupError,
    RationalDomainError,
    SearchBudgetError,
    StateLimitError,
)
from .groups import (
    FiniteGroup,
    FreeAlphabet,
    FreeWord,
    cyclic_group,
    format_group_file,
    free_reduce,
    klein_group,
    load_group,
    symmetric_group_3,
)
from .polynomials import (
    Polynomial,
    Token,
    canonical_alphabet,
    gen,
    interpret,
    parse_polynomial,
    serialize,
    substitute,
    var,
    varinv,
)
from .rationals import (
    IsolatedPoint,
    IsolationReport,
    PumpingWitness,
    RationalSet,
    RefutationReport,
    auto_pumping_witness,
    divisor_pairs,
    divisor_pairs_by_search,
    isolated_points,
    lang_member,
    pumping_witness_params,
    refute_pumping,
    word_member,
)

__version__ = "0.1.0"

__all__ = [
    "Answer",
    "CapacityError",
    "Dfa",
    "DovetailResult",
    "EquationSyntaxError",
    "FiniteGroup",
    "FreeAlphabet",
    "FreeWord",
    "GeneratingSetError",
    "GroupEqError",
    "GroupParseError",
    "InvalidGroupError",
    "IsolatedPoint",
    "IsolationReport",
    "Polynomial",
    "PumpingWitness",
    "RationalDomainError",
    "RationalSet",
    "RefutationReport",
    "SearchBudgetError",
    "SolutionReport",
    "SolverState",
    "StateLimitError",
    "Token",
    "auto_pumping_witness",
    "build_reachable_dfa",
    "canonical_alphabet",
    "cyclic_group",
    "divisor_pairs",
    "divisor_pairs_by_search",
    "dovetail_solve",
    "enumerate_language",
    "export_dfa",
    "finite_group_oracle",
    "format_group_file",
    "free_group_oracle",
    "free_reduce",
    "gen",
    "initial_state",
    "interpret",
    "is_accepting",
    "isolated_points",
    "klein_group",
    "lang_member",
    "load_group",
    "membership",
    "minimize_dfa",
    "parse_polynomial",
    "pumping_witness_params",
    "refute_pumping",
    "serialize",
    "solve_brute",
    "step",
    "substitute",
    "symmetric_group_3",
    "var",
    "varinv",
    "word_member",
]
