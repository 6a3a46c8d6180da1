"""Command-line client.

By default every subcommand runs the shared service handlers in process,
so no server is required and identical invocations produce byte-identical
output.  Pass ``--server http://host:port`` to send the same request to a
running instance instead.

Exit codes: 0 success, 2 input/parse errors, 3 mathematical precondition
failures, 4 insufficient input data.  Output formats: pretty (default),
json, csv (one row per line, rationals as p/q).
"""

from __future__ import annotations

import argparse
import json
import sys

from pydantic import ValidationError

from .errors import ComputationError, InsufficientDataError
from .gfparse import ParseError
from .service import handlers
from .service.schemas import (
    CfracRequest,
    CfracResponse,
    DFractionPayload,
    DorthRequest,
    DorthResponse,
    FamilyPayload,
    HankelRequest,
    HankelResponse,
    RiordanRequest,
    RiordanResponse,
    SeriesRequest,
    SeriesResponse,
    VerifyResponse,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_MATH = 3
EXIT_DATA = 4

_CATEGORY_EXITS = {"parse": EXIT_INPUT, "precondition": EXIT_MATH,
                   "insufficient-data": EXIT_DATA}


class RemoteFailure(Exception):
    def __init__(self, message: str, category: str | None):
        super().__init__(message)
        self.category = category


# ----- plumbing ---------------------------------------------------------------

def _call(args, path: str, request, response_model):
    """Run a request against the in-process handlers or a remote server."""
    if args.server:
        import httpx

        url = args.server.rstrip("/") + path
        if request is None:
            reply = httpx.get(url, timeout=120.0)
        else:
            reply = httpx.post(url, json=request.model_dump(exclude_none=True),
                               timeout=120.0)
        if reply.status_code >= 400:
            try:
                body = reply.json()
            except ValueError:
                body = {}
            raise RemoteFailure(body.get("message", reply.text),
                                body.get("category"))
        return response_model(**reply.json())
    local = {
        "/gf": handlers.compute_series,
        "/riordan": handlers.compute_riordan,
        "/dhankel": handlers.compute_dhankel,
        "/dorth": handlers.compute_dorth,
        "/cfrac": handlers.compute_cfrac,
    }
    if path.startswith("/verify/"):
        return handlers.compute_verify(path.removeprefix("/verify/"))
    return local[path](request)


def _emit(args, response, pretty_fn, csv_fn) -> None:
    if args.format == "json":
        print(json.dumps(response.model_dump(exclude_none=True), indent=2))
    elif args.format == "csv":
        print(csv_fn(response))
    else:
        print(pretty_fn(response))


def _table(rows: list[list[str]]) -> str:
    widths: dict[int, int] = {}
    for row in rows:
        for j, cell in enumerate(row):
            widths[j] = max(widths.get(j, 0), len(cell))
    return "\n".join(
        "  ".join(cell.rjust(widths[j]) for j, cell in enumerate(row))
        for row in rows)


def _csv_rows(rows: list[list[str]]) -> str:
    return "\n".join(",".join(row) for row in rows)


def _load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _family_from_file(path: str) -> FamilyPayload:
    payload = _load_json(path)
    if isinstance(payload, dict) and "sequences" not in payload and "column_sums" in payload:
        payload = payload["column_sums"]
    return FamilyPayload(**payload)


def _bands_from_file(path: str) -> DFractionPayload:
    payload = _load_json(path)
    if isinstance(payload, dict) and "bands" in payload and isinstance(payload["bands"], dict):
        payload = payload["bands"]
    return DFractionPayload(**payload)


def _split_rationals(text: str) -> list[str]:
    return [piece.strip() for piece in text.split(",") if piece.strip()]


def _source_kwargs(args) -> dict:
    kwargs = {"kind": args.kind}
    if getattr(args, "rows", None) is not None:
        kwargs["rows"] = args.rows
    if args.g_expr is not None or args.f_expr is not None:
        kwargs.update(g=args.g_expr, f=args.f_expr)
    if args.z_expr is not None or args.a_expr is not None:
        kwargs.update(z=args.z_expr, a=args.a_expr)
    return kwargs


def _add_source_flags(parser: argparse.ArgumentParser, with_rows: bool = True) -> None:
    parser.add_argument("--g", dest="g_expr", metavar="EXPR",
                        help="expression for g(x)")
    parser.add_argument("--f", dest="f_expr", metavar="EXPR",
                        help="expression for f(x)")
    parser.add_argument("--from-za", action="store_true",
                        help="build the array from Z and A data")
    parser.add_argument("--Z", dest="z_expr", metavar="EXPR",
                        help="expression for the Z polynomial")
    parser.add_argument("--A", dest="a_expr", metavar="EXPR",
                        help="expression for the A polynomial")
    parser.add_argument("--kind", choices=["ogf", "egf"], default="ogf",
                        help="ogf for ordinary arrays, egf for exponential")
    if with_rows:
        parser.add_argument("--rows", type=int, default=8,
                            help="size of the displayed tables")


# ----- renderers ---------------------------------------------------------------

def _pretty_gf(r: SeriesResponse) -> str:
    lines = [f"expr: {r.expr}",
             f"kind: {r.kind}  order: {r.order}",
             "coefficients: " + ", ".join(r.coefficients)]
    if r.kind == "egf":
        lines.append("sequence:     " + ", ".join(r.sequence))
    return "\n".join(lines)


def _csv_gf(r: SeriesResponse) -> str:
    return ",".join(r.sequence)


def _pretty_riordan(r: RiordanResponse) -> str:
    lines = [f"kind: {r.kind}  rows: {r.rows}",
             "g coefficients: " + ", ".join(r.g),
             "f coefficients: " + ", ".join(r.f),
             "triangle:", _table(r.triangle)]
    if r.production is not None:
        lines += ["production matrix:", _table(r.production)]
    if r.z is not None:
        lines += ["Z coefficients: " + ", ".join(r.z),
                  "A coefficients: " + ", ".join(r.a)]
    if r.column_sums is not None:
        lines.append(f"column sums (d={r.column_sums.d}):")
        for seq in r.column_sums.sequences:
            lines.append("  " + ", ".join(str(v) for v in seq))
    return "\n".join(lines)


def _csv_riordan(r: RiordanResponse) -> str:
    sections = [_csv_rows(r.triangle)]
    if r.production is not None:
        sections.append(_csv_rows(r.production))
    if r.column_sums is not None:
        sections.append(_csv_rows([[str(v) for v in seq]
                                   for seq in r.column_sums.sequences]))
    return "\n\n".join(sections)


def _pretty_dhankel(r: HankelResponse) -> str:
    lines = [f"d: {r.d}  n: {r.n}",
             "h: " + ", ".join(r.h)]
    if r.gamma is not None:
        lines.append("gamma: " + ", ".join(r.gamma))
        lines.append("products: " + ", ".join(r.products))
        lines.append(f"gamma-check: {'PASS' if r.gamma_match else 'FAIL'}")
    return "\n".join(lines)


def _csv_dhankel(r: HankelResponse) -> str:
    return ",".join(r.h)


def _pretty_dorth(r: DorthResponse) -> str:
    lines = [f"method: {r.method}  d: {r.d if r.d is not None else 'not banded to the computed order'}"]
    for n, text in enumerate(r.pretty):
        lines.append(f"P_{n} = {text}")
    if r.recurrence is not None:
        lines.append("alpha: " + ", ".join(r.recurrence.alpha))
        for j, band in enumerate(r.recurrence.bands, start=1):
            lines.append(f"band {j}: " + ", ".join(band))
    return "\n".join(lines)


def _csv_dorth(r: DorthResponse) -> str:
    return _csv_rows(r.polynomials)


def _pretty_cfrac(r: CfracResponse) -> str:
    lines = [f"d: {r.d}  order: {r.order}",
             "coefficients: " + ", ".join(r.coefficients)]
    for j, band in enumerate(r.bands.bands):
        shown = ", ".join(str(v) for v in band[:r.order])
        lines.append(f"band {j}: {shown}")
    return "\n".join(lines)


def _csv_cfrac(r: CfracResponse) -> str:
    return ",".join(r.coefficients)


def _pretty_verify(r: VerifyResponse) -> str:
    lines = [f"{r.example}: {r.description}"]
    for check in r.checks:
        mark = "PASS" if check.passed else "FAIL"
        suffix = f"  ({check.detail})" if check.detail else ""
        lines.append(f"  [{mark}] {check.name}{suffix}")
    lines.append(f"{r.example}: {'PASS' if r.passed else 'FAIL'}")
    return "\n".join(lines)


def _csv_verify(r: VerifyResponse) -> str:
    return _csv_rows([[r.example, c.name, "pass" if c.passed else "fail"]
                      for c in r.checks])


# ----- subcommands ---------------------------------------------------------------

def cmd_gf(args) -> int:
    request = SeriesRequest(expr=args.expr, order=args.order, kind=args.kind)
    response = _call(args, "/gf", request, SeriesResponse)
    _emit(args, response, _pretty_gf, _csv_gf)
    return EXIT_OK


def cmd_riordan(args) -> int:
    request = RiordanRequest(
        **_source_kwargs(args),
        inverse=args.inverse,
        production=args.production,
        za_sequences=args.za,
        column_sums=args.column_sums,
    )
    response = _call(args, "/riordan", request, RiordanResponse)
    _emit(args, response, _pretty_riordan, _csv_riordan)
    return EXIT_OK


def cmd_dhankel(args) -> int:
    family = _family_from_file(args.family) if args.family else None
    request = HankelRequest(
        family=family,
        source=None if family is not None else _source_kwargs(args),
        d=args.d if family is None else None,
        n=args.n,
        gamma=_split_rationals(args.gamma) if args.gamma else None,
        gamma_from_production=args.gamma_check,
    )
    response = _call(args, "/dhankel", request, HankelResponse)
    _emit(args, response, _pretty_dhankel, _csv_dhankel)
    return EXIT_OK


def cmd_dorth(args) -> int:
    family = _family_from_file(args.family) if args.family else None
    request = DorthRequest(
        family=family,
        source=None if family is not None else _source_kwargs(args),
        count=args.count,
        recurrence=args.recurrence,
    )
    response = _call(args, "/dorth", request, DorthResponse)
    _emit(args, response, _pretty_dorth, _csv_dorth)
    return EXIT_OK


def cmd_cfrac(args) -> int:
    bands = _bands_from_file(args.bands) if args.bands else None
    request = CfracRequest(
        bands=bands,
        source=None if bands is not None else _source_kwargs(args),
        d=args.d if bands is None else None,
        order=args.order,
    )
    response = _call(args, "/cfrac", request, CfracResponse)
    _emit(args, response, _pretty_cfrac, _csv_cfrac)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .golden import EXAMPLE_IDS

    targets = EXAMPLE_IDS if args.example == "all" else (args.example,)
    unknown = [t for t in targets if t not in EXAMPLE_IDS]
    if unknown:
        print(f"error: unknown example {unknown[0]!r}; "
              f"valid ids: {', '.join(EXAMPLE_IDS)}", file=sys.stderr)
        return EXIT_INPUT
    all_passed = True
    for target in targets:
        response = _call(args, f"/verify/{target}", None, VerifyResponse)
        _emit(args, response, _pretty_verify, _csv_verify)
        all_passed = all_passed and response.passed
    return EXIT_OK if all_passed else 1


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("riordankit.service.app:app", host=args.host, port=args.port)
    return EXIT_OK


# ----- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="riordankit",
        description="Exact Riordan arrays, d-Hankel transforms, d-orthogonal "
                    "polynomials and generalized continued fractions.")
    parser.add_argument("--server", metavar="URL",
                        help="send requests to a running service instead of "
                             "computing in process")
    parser.add_argument("--format", choices=["pretty", "json", "csv"],
                        default="pretty")
    parser.set_defaults(server=None, format="pretty")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name: str, **kwargs) -> argparse.ArgumentParser:
        # accept --server/--format after the subcommand too; SUPPRESS keeps
        # a value given before the subcommand from being reset to the default
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--server", metavar="URL", default=argparse.SUPPRESS)
        p.add_argument("--format", choices=["pretty", "json", "csv"],
                       default=argparse.SUPPRESS)
        return p

    p = add_parser("gf", help="evaluate a generating-function expression")
    p.add_argument("--expr", required=True)
    p.add_argument("--order", type=int, default=16)
    p.add_argument("--kind", choices=["ogf", "egf"], default="ogf")
    p.set_defaults(func=cmd_gf)

    p = add_parser("riordan", help="triangle, inverse, production matrix, "
                                       "Z/A data, column sums")
    _add_source_flags(p)
    p.add_argument("--inverse", action="store_true",
                   help="work with the inverse array")
    p.add_argument("--production", action="store_true",
                   help="include the production matrix")
    p.add_argument("--za", action="store_true",
                   help="include the Z and A coefficient lists")
    p.add_argument("--column-sums", type=int, metavar="D",
                   help="include the family of the first D column sums")
    p.set_defaults(func=cmd_riordan)

    p = add_parser("dhankel", help="d-Hankel transform of a family")
    p.add_argument("--family", metavar="FILE",
                   help="JSON file with {\"d\": ..., \"sequences\": [[...], ...]}")
    _add_source_flags(p, with_rows=False)
    p.add_argument("--d", type=int, help="number of column sums to take "
                                         "when building from an array source")
    p.add_argument("--n", type=int, default=7, help="compute h_0..h_n")
    p.add_argument("--gamma", metavar="LIST",
                   help="comma-separated gamma values for the product-formula "
                        "comparison")
    p.add_argument("--gamma-check", action="store_true",
                   help="derive gamma from the production matrix's lowest band "
                        "(array sources only) and compare")
    p.set_defaults(func=cmd_dhankel)

    p = add_parser("dorth", help="d-orthogonal polynomial families")
    p.add_argument("--family", metavar="FILE",
                   help="family JSON; uses the determinant construction")
    _add_source_flags(p, with_rows=False)
    p.add_argument("--count", type=int, default=6,
                   help="number of polynomials P_0..P_{count-1}")
    p.add_argument("--recurrence", action="store_true",
                   help="recover d=2 recurrence bands from determinants")
    p.set_defaults(func=cmd_dorth)

    p = add_parser("cfrac", help="generalized continued-fraction expansion")
    p.add_argument("--bands", metavar="FILE",
                   help="JSON file with {\"d\": ..., \"bands\": [[...], ...]}")
    _add_source_flags(p, with_rows=False)
    p.add_argument("--d", type=int, help="fraction order for an array source")
    p.add_argument("--order", type=int, default=16,
                   help="number of expansion coefficients")
    p.set_defaults(func=cmd_cfrac)

    p = add_parser("verify", help="replay a worked example against "
                                      "embedded golden tables")
    p.add_argument("example", help="example id (e1..e5) or 'all'")
    p.set_defaults(func=cmd_verify)

    p = add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InsufficientDataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ComputationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH
    except ValidationError as exc:
        first = exc.errors()[0]
        print(f"error: invalid request: {first['msg']}", file=sys.stderr)
        return EXIT_INPUT
    except RemoteFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _CATEGORY_EXITS.get(exc.category, EXIT_INPUT)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
