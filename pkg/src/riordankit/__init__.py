"""Exact-arithmetic Riordan arrays, d-Hankel transforms, d-orthogonal
polynomial families and generalized continued fractions."""

from .errors import (
    ComputationError,
    InsufficientDataError,
    KindMismatchError,
    PreconditionError,
    TruncationError,
)
from .series import (
    EGF,
    OGF,
    Series,
    as_rational,
    binomial_transform,
    exp_series,
    format_rational,
    log_series,
    ogf_egf_convert,
    pow_int,
    sqrt_series,
)
from .gfparse import EvalError, GfExpr, ParseError, evaluate, eval_expr, parse, unparse
from .riordan import (
    EXPONENTIAL,
    ORDINARY,
    ProductionMatrix,
    RiordanArray,
    TriangleSlice,
    coefficient_array_from_za,
    column_sums,
    entry,
    from_za,
    generate_from_production,
    inverse,
    production_from_za,
    production_via_matrix,
    production_via_series,
    triangle,
    za_sequences,
)
from .dhankel import (
    HankelResult,
    Polynomial,
    SequenceFamily,
    det_exact,
    det_gauss,
    dhankel,
    dhankel_matrix,
    dhankel_poly,
    dhankel_transform,
    product_formula,
    required_length,
)
from .dorth import (
    PolyFamily,
    RecurrenceBands,
    coefficient_triangle,
    orthogonality_order,
    polys_from_determinants,
    polys_from_production,
    recurrence_from_determinants,
)
from .cfrac import DFraction, expand, from_production

__version__ = "0.1.0"
