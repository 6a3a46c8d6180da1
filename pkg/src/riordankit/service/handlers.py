"""Endpoint logic, shared verbatim by the HTTP routes and the in-process CLI.

Handlers take a validated request model and return a response model; all
failures surface as the package's typed exceptions (ParseError for bad
expressions, PreconditionError and friends for mathematical failures),
which the app and the CLI translate into their own error surfaces.
"""

from __future__ import annotations

from .. import cfrac as cfrac_mod
from ..dhankel import (
    SequenceFamily,
    dhankel_transform,
    product_formula,
    required_length,
)
from ..dorth import (
    orthogonality_order,
    polys_from_determinants,
    polys_from_production,
    recurrence_from_determinants,
)
from ..errors import PreconditionError
from ..gfparse import eval_expr, parse
from ..golden import EXAMPLES, verify
from ..riordan import (
    EXPONENTIAL,
    ORDINARY,
    RiordanArray,
    column_sums,
    from_za,
    inverse,
    production_via_matrix,
    triangle,
    za_sequences,
)
from ..series import EGF, OGF, as_rational, format_rational
from .schemas import (
    CfracRequest,
    CfracResponse,
    CheckPayload,
    DFractionPayload,
    DorthRequest,
    DorthResponse,
    ExampleInfo,
    ExamplesResponse,
    FamilyPayload,
    HankelRequest,
    HankelResponse,
    RecurrencePayload,
    RiordanRequest,
    RiordanResponse,
    RiordanSource,
    SeriesRequest,
    SeriesResponse,
    VerifyResponse,
)

_SERIES_KIND = {"ogf": OGF, "egf": EGF}
_ARRAY_KIND = {"ogf": ORDINARY, "egf": EXPONENTIAL}


def _strings(values) -> list[str]:
    return [format_rational(as_rational(v)) for v in values]


def build_array(source: RiordanSource, order: int) -> RiordanArray:
    """Evaluate a source's expressions into an array of the given order.

    Both expressions are parsed up front so syntax errors surface before
    any series arithmetic runs.
    """
    skind = _SERIES_KIND[source.kind]
    akind = _ARRAY_KIND[source.kind]
    if source.g is not None:
        first, second = parse(source.g), parse(source.f)
        g = eval_expr(first, order, skind, source=source.g)
        f = eval_expr(second, order, skind, source=source.f)
        return RiordanArray(akind, g, f)
    first, second = parse(source.z), parse(source.a)
    z = eval_expr(first, order, skind, source=source.z)
    a = eval_expr(second, order, skind, source=source.a)
    return from_za(akind, z, a, order)


def _family_payload(family: SequenceFamily) -> FamilyPayload:
    return FamilyPayload(**family.to_json())


def _family_from_payload(payload: FamilyPayload) -> SequenceFamily:
    return SequenceFamily.from_values(payload.d, payload.sequences)


def _family_from_source(source: RiordanSource, d: int, length: int) -> SequenceFamily:
    array = build_array(source, max(length, 2))
    return column_sums(triangle(array), d)


def compute_series(request: SeriesRequest) -> SeriesResponse:
    s = eval_expr(parse(request.expr), request.order, request.kind,
                  source=request.expr)
    return SeriesResponse(
        expr=request.expr,
        kind=request.kind,
        order=request.order,
        coefficients=_strings(s.coeffs),
        sequence=_strings(s.terms()),
    )


def compute_riordan(request: RiordanRequest) -> RiordanResponse:
    # one extra row so a rows-sized production matrix is fully determined
    array = build_array(request, request.rows + 1)
    if request.inverse:
        array = inverse(array)
    slice_ = triangle(array, request.rows)
    response = RiordanResponse(
        kind=request.kind,
        rows=request.rows,
        g=_strings(array.g.coeffs[:request.rows]),
        f=_strings(array.f.coeffs[:request.rows]),
        triangle=slice_.to_json(),
    )
    if request.production:
        production = production_via_matrix(array, request.rows)
        response.production = production.to_json(request.rows)
    if request.za_sequences:
        z, a = za_sequences(array)
        response.z = _strings(z.coeffs)
        response.a = _strings(a.coeffs)
    if request.column_sums is not None:
        response.column_sums = _family_payload(column_sums(slice_, request.column_sums))
    return response


def compute_dhankel(request: HankelRequest) -> HankelResponse:
    if request.family is not None:
        family = _family_from_payload(request.family)
    else:
        family = _family_from_source(
            request.source, request.d, required_length(request.d, request.n))
    result = dhankel_transform(family, request.n)
    response = HankelResponse(
        d=family.d,
        n=request.n,
        h=_strings(result.values),
        family=_family_payload(family),
    )
    gamma = None
    if request.gamma is not None:
        gamma = [as_rational(v) for v in request.gamma]
    elif request.gamma_from_production:
        array = build_array(request.source, request.n + family.d + 2)
        production = production_via_matrix(array)
        gamma = production.band(family.d)[:request.n + 1]
        if len(gamma) < request.n + 1:
            raise PreconditionError(
                f"production band too short for {request.n + 1} gamma values")
    if gamma is not None:
        products = [product_formula(gamma, family.d, m) for m in range(request.n + 1)]
        response.gamma = _strings(gamma[:request.n + 1])
        response.products = _strings(products)
        response.gamma_match = tuple(products) == result.values
    return response


def compute_dorth(request: DorthRequest) -> DorthResponse:
    recurrence = None
    if request.family is not None:
        family = _family_from_payload(request.family)
        poly_family = polys_from_determinants(family, request.count)
        order_d: int | None = family.d
        method = "determinants"
        if request.recurrence:
            bands = recurrence_from_determinants(family, request.count)
            recurrence = RecurrencePayload(
                d=bands.d,
                alpha=_strings(bands.alpha),
                bands=[_strings(b) for b in bands.bands],
            )
    else:
        # a few extra rows so the reported band offset is witnessed on a
        # wider slice than the polynomials strictly need
        array = build_array(request.source, request.count + 4)
        production = production_via_matrix(array)
        poly_family = polys_from_production(production, request.count)
        order_d = orthogonality_order(production)
        method = "production"
        if request.recurrence:
            raise PreconditionError(
                "determinantal recurrence extraction needs a family input")
    return DorthResponse(
        d=order_d,
        method=method,
        polynomials=poly_family.to_json(),
        pretty=[str(p) for p in poly_family.polys],
        recurrence=recurrence,
    )


def compute_cfrac(request: CfracRequest) -> CfracResponse:
    if request.bands is not None:
        fraction = cfrac_mod.DFraction.from_values(request.bands.d, request.bands.bands)
    else:
        # expansion needs band depth order + d, so the lowest band must
        # reach that deep: production size order + 2d, array one order more
        array = build_array(request.source, request.order + 2 * request.d + 1)
        production = production_via_matrix(array)
        fraction = cfrac_mod.from_production(production, request.d)
    series = cfrac_mod.expand(fraction, request.order)
    return CfracResponse(
        d=fraction.d,
        order=request.order,
        coefficients=_strings(series.coeffs),
        bands=DFractionPayload(**fraction.to_json()),
    )


def compute_verify(example_id: str) -> VerifyResponse:
    report = verify(example_id)
    return VerifyResponse(
        example=report.example,
        description=report.description,
        passed=report.passed,
        checks=[CheckPayload(name=c.name, passed=c.passed, detail=c.detail)
                for c in report.checks],
    )


def list_examples() -> ExamplesResponse:
    return ExamplesResponse(examples=[
        ExampleInfo(id=example_id, description=description)
        for example_id, (description, _) in EXAMPLES.items()
    ])
