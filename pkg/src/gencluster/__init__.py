"""Exact engine for generalized cluster seed patterns.

Coefficient tuples take values in nonnegative integer combinations of
semifield elements (trivial or tropical); mutation, F-polynomials,
c-/g-vectors, separation checks, and exchange-graph exploration all run in
exact arithmetic.
"""

from .semifield import (
    ContextError,
    DomainError,
    NonNegCombination,
    SemifieldContext,
    SemifieldElement,
    inv,
    m_fold_sum,
    oplus,
    otimes,
    power,
    project_tilde,
)
from .exactalg import (
    Algebra,
    DivisionByZero,
    LaurentPolynomial,
    NonExactDivision,
    PoleAtPoint,
    RationalFunction,
    embed_combination,
    embed_semifield,
    exact_div,
)
from .seedcore import (
    BadBoundaryCoefficient,
    BadTupleLength,
    ContextMismatch,
    EmptyExchangeSum,
    ExchangeMatrix,
    NotSkewSymmetrizable,
    Seed,
    exchange_denominator_tilde,
    hat_y,
    initial_seed,
    mutate,
    mutate_matrix,
    mutate_word,
    mutate_x,
    mutate_y,
    mutate_z,
    principal_seed,
    validate_seed,
)
from .patterns import (
    MutationRun,
    NotHomogeneous,
    NotPolynomial,
    SeparationMismatch,
    SeparationReport,
    c_vector,
    f_polynomial,
    f_restricted_tilde,
    g_vector,
    principal_companion,
    run_general,
    run_principal,
    verify_x_separation,
    verify_y_separation,
)

__version__ = "0.1.0"
