"""Exact B-Stirling numbers, potential polynomials and the series calculus behind them.

Quick start::

    >>> from bstirling import series, triangle_from_series
    >>> b = series("circ(E,E)", 6)            # exp(e^z - 1)
    >>> [str(c) for c in b]
    ['1', '1', '2', '5', '15', '52', '203']
    >>> triangle_from_series(series("E", 4), "second", 4).entry(4, 2)
    Fraction(7, 1)
"""

from .bell import bell_oracle, complete_bell, partial_bell
from .catalog import CATALOG, Atom, Circ, Diamond, build, eval_expr, parse, series
from .egf import (
    EgfSeries,
    add,
    binomial_convolution,
    circ,
    diamond,
    exp_series,
    log_series,
    pow_scalar,
    rational,
    substitute,
)
from .errors import (
    BadArity,
    BadDistribution,
    BadIndices,
    BadParameter,
    BStirlingError,
    KindMismatch,
    NonzeroConstantTerm,
    NotInClassB,
    OrderTooSmall,
    SeriesSpecError,
    SeriesSyntaxError,
    SizeMismatch,
    TooLarge,
    UnknownName,
    ZeroLambda,
)
from .potential import (
    PotentialPolynomial,
    compose_potential_circ,
    compose_potential_diamond,
    degenerate_falling,
    derivative,
    derivative_expansion,
    difference_expansion,
    evaluate,
    falling_factorial,
    forward_difference,
    forward_difference_pointwise,
    potential,
    sheffer_combine,
)
from .probabilistic import (
    FiniteSupport,
    Poisson,
    bernoulli,
    mgf_series,
    moment,
    moment_oracle,
    parse_distribution,
    point_mass,
    probabilistic_triangles,
    stirling_from_moments,
)
from .restricted import (
    AtLeast,
    AtMost,
    EvenOnly,
    ExplicitSet,
    count_list_partitions,
    count_partitions,
    count_permutations,
)
from .stirling import (
    Kind,
    StirlingTriangle,
    classical_first,
    classical_second,
    compose_circ_triangles,
    compose_diamond_triangles,
    convert_first_to_second,
    convert_second_to_first,
    triangle_from_series,
    triangle_recursive,
)
from .verify import verify_suite

__all__ = [
    "add",
    "AtLeast",
    "AtMost",
    "Atom",
    "BadArity",
    "BadDistribution",
    "BadIndices",
    "BadParameter",
    "bell_oracle",
    "bernoulli",
    "binomial_convolution",
    "BStirlingError",
    "build",
    "CATALOG",
    "Circ",
    "circ",
    "classical_first",
    "classical_second",
    "complete_bell",
    "compose_circ_triangles",
    "compose_diamond_triangles",
    "compose_potential_circ",
    "compose_potential_diamond",
    "convert_first_to_second",
    "convert_second_to_first",
    "count_list_partitions",
    "count_partitions",
    "count_permutations",
    "degenerate_falling",
    "derivative",
    "derivative_expansion",
    "Diamond",
    "diamond",
    "difference_expansion",
    "EgfSeries",
    "eval_expr",
    "evaluate",
    "EvenOnly",
    "exp_series",
    "ExplicitSet",
    "falling_factorial",
    "FiniteSupport",
    "forward_difference",
    "forward_difference_pointwise",
    "Kind",
    "KindMismatch",
    "log_series",
    "mgf_series",
    "moment",
    "moment_oracle",
    "NonzeroConstantTerm",
    "NotInClassB",
    "OrderTooSmall",
    "parse",
    "parse_distribution",
    "partial_bell",
    "point_mass",
    "Poisson",
    "potential",
    "PotentialPolynomial",
    "pow_scalar",
    "probabilistic_triangles",
    "rational",
    "series",
    "SeriesSpecError",
    "SeriesSyntaxError",
    "sheffer_combine",
    "SizeMismatch",
    "stirling_from_moments",
    "StirlingTriangle",
    "substitute",
    "TooLarge",
    "triangle_from_series",
    "triangle_recursive",
    "UnknownName",
    "verify_suite",
    "ZeroLambda",
]

__version__ = "0.1.0"
