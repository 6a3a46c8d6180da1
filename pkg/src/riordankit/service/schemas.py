"""Pydantic request and response models shared by the HTTP service and the
command-line client.

All rational values travel as strings ("p/q", or "n" when integral) so no
JSON consumer can lose precision; integers are accepted on input as a
convenience.
"""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, Field, model_validator

Kind = Literal["ogf", "egf"]
ArrayKind = Kind  # ogf arrays are ordinary Riordan arrays, egf arrays exponential
RationalStr = Union[int, str]


class SeriesRequest(BaseModel):
    expr: str
    order: int = Field(default=16, ge=1, le=128)
    kind: Kind = "ogf"


class SeriesResponse(BaseModel):
    expr: str
    kind: Kind
    order: int
    coefficients: list[str]
    sequence: list[str]


class FamilyPayload(BaseModel):
    """Wire form of a sequence family: {"d": ..., "sequences": [[...], ...]}."""

    d: int = Field(ge=1, le=8)
    sequences: list[list[RationalStr]]


class RiordanSource(BaseModel):
    """An array given either as a (g, f) pair of expressions or as (Z, A)
    polynomial expressions to reconstruct from."""

    g: Optional[str] = None
    f: Optional[str] = None
    z: Optional[str] = None
    a: Optional[str] = None
    kind: ArrayKind = "ogf"
    rows: int = Field(default=8, ge=2, le=64)

    @model_validator(mode="after")
    def _check_source(self):
        pair = self.g is not None and self.f is not None
        za = self.z is not None and self.a is not None
        if pair == za:
            raise ValueError("give either both of g and f, or both of z and a")
        return self


class RiordanRequest(RiordanSource):
    inverse: bool = False
    production: bool = False
    za_sequences: bool = False
    column_sums: Optional[int] = Field(default=None, ge=1, le=8)


class RiordanResponse(BaseModel):
    kind: ArrayKind
    rows: int
    g: list[str]
    f: list[str]
    triangle: list[list[str]]
    production: Optional[list[list[str]]] = None
    z: Optional[list[str]] = None
    a: Optional[list[str]] = None
    column_sums: Optional[FamilyPayload] = None


class HankelRequest(BaseModel):
    """Transform a family given inline, or built from the column sums of a
    Riordan array source."""

    family: Optional[FamilyPayload] = None
    source: Optional[RiordanSource] = None
    d: Optional[int] = Field(default=None, ge=1, le=8)
    n: int = Field(default=7, ge=0, le=32)
    gamma: Optional[list[RationalStr]] = None
    gamma_from_production: bool = False

    @model_validator(mode="after")
    def _check_inputs(self):
        if (self.family is None) == (self.source is None):
            raise ValueError("give either a family or a riordan source")
        if self.source is not None and self.d is None:
            raise ValueError("a riordan source needs d, the number of column sums")
        if self.gamma_from_production and self.source is None:
            raise ValueError("gamma_from_production needs a riordan source")
        if self.gamma is not None and self.gamma_from_production:
            raise ValueError("give gamma explicitly or derive it, not both")
        return self


class HankelResponse(BaseModel):
    d: int
    n: int
    h: list[str]
    family: FamilyPayload
    gamma: Optional[list[str]] = None
    products: Optional[list[str]] = None
    gamma_match: Optional[bool] = None


class DorthRequest(BaseModel):
    """Polynomials from a family (determinant route) or from an array
    source's production matrix (recurrence route)."""

    family: Optional[FamilyPayload] = None
    source: Optional[RiordanSource] = None
    d: Optional[int] = Field(default=None, ge=1, le=8)
    count: int = Field(default=6, ge=1, le=32)
    recurrence: bool = False

    @model_validator(mode="after")
    def _check_inputs(self):
        if (self.family is None) == (self.source is None):
            raise ValueError("give either a family or a riordan source")
        return self


class RecurrencePayload(BaseModel):
    d: int
    alpha: list[str]
    bands: list[list[str]]


class DorthResponse(BaseModel):
    d: Optional[int]
    method: Literal["production", "determinants"]
    polynomials: list[list[str]]
    pretty: list[str]
    recurrence: Optional[RecurrencePayload] = None


class DFractionPayload(BaseModel):
    """Wire form of continued-fraction band data."""

    d: int = Field(ge=1, le=8)
    bands: list[list[RationalStr]]


class CfracRequest(BaseModel):
    bands: Optional[DFractionPayload] = None
    source: Optional[RiordanSource] = None
    d: Optional[int] = Field(default=None, ge=1, le=8)
    order: int = Field(default=16, ge=1, le=32)

    @model_validator(mode="after")
    def _check_inputs(self):
        if (self.bands is None) == (self.source is None):
            raise ValueError("give either fraction bands or a riordan source")
        if self.source is not None and self.d is None:
            raise ValueError("a riordan source needs d, the fraction order")
        return self


class CfracResponse(BaseModel):
    d: int
    order: int
    coefficients: list[str]
    bands: DFractionPayload


class CheckPayload(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class VerifyResponse(BaseModel):
    example: str
    description: str
    passed: bool
    checks: list[CheckPayload]


class ExampleInfo(BaseModel):
    id: str
    description: str


class ExamplesResponse(BaseModel):
    examples: list[ExampleInfo]


class ErrorPayload(BaseModel):
    category: Literal["parse", "precondition", "insufficient-data"]
    message: str
    offset: Optional[int] = None
    needed: Optional[int] = None
    have: Optional[int] = None
