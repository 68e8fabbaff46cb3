"""Exact Hilbert series of multigraded modules: recognition, decompositions and depth."""

from .bigraded import (
    DepthOutcome,
    FractionalMonomialIdeal,
    check_condition_c,
    decide_positive_depth,
    find_st_violation,
    greedy_row_decompose,
    ideal_quotient_series,
    normalize_weakly_declining,
    sigma,
    split_low_part,
)
from .decider import (
    DecisionOutcome,
    GradingSpec,
    Witness,
    binomial_decompose,
    decide_hilbert,
    decide_hilbert_fine,
    find_negative_coefficient,
    witness_check,
)
from .formats import ParseError, format_series, parse_laurent, parse_series
from .geometry import (
    extremal_monomials,
    has_positive_extremal_coefficients,
    newton_vertices,
    nonneg_vertex_check,
    separating_form,
)
from .laurent import LaurentPolynomial
from .polynomial import MultiPolynomial, hilbert_polynomial, to_binomial_basis
from .semigroup import (
    FundamentalCouple,
    SemigroupSpec,
    check_star,
    couple_check,
    couple_module_series,
    decide_positive_depth_ns,
    fundamental_couples,
    gaps,
    is_hilbert_series_ns,
)
from .series import (
    Box,
    DecompositionTerm,
    HilbertDecomposition,
    RationalSeries,
    decomposition_to_series,
    quotient,
    quotient_nonneg_check,
    verify_decomposition,
)

__version__ = "0.1.0"
