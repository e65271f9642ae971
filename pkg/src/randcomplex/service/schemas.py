"""Request/response models for the lab service."""

from __future__ import annotations

from pydantic import BaseModel, Field, field_validator


def _check_probs(values: list[float]) -> list[float]:
    for x in values:
        if not 0.0 <= x <= 1.0:
            raise ValueError(f"probability {x} outside [0, 1]")
    return values


class ComplexModel(BaseModel):
    """Canonical wire encoding of a complex: maximal faces over (n, r)."""

    n: int = Field(ge=0)
    r: int = Field(ge=0)
    maximal_faces: list[list[int]]


class SampleRequest(BaseModel):
    n: int = Field(ge=0)
    r: int = Field(ge=0)
    p: list[float]
    seed: int = 0
    count: int = Field(default=1, ge=1)

    _probs = field_validator("p")(_check_probs)


class SampleResponse(BaseModel):
    complexes: list[ComplexModel]


class EnumerateRequest(BaseModel):
    n: int = Field(ge=0)
    r: int = Field(ge=0)
    p: list[float] | None = None
    guard: int | None = None

    @field_validator("p")
    @classmethod
    def _probs(cls, v):
        return None if v is None else _check_probs(v)


class EnumerateEntry(BaseModel):
    maximal_faces: list[list[int]]
    probability: float | None = None


class EnumerateResponse(BaseModel):
    n: int
    r: int
    count: int
    entries: list[EnumerateEntry]


class VerifyRequest(BaseModel):
    n: int = Field(ge=0)
    r: int = Field(ge=0)
    p_grid: list[list[float]]
    guard: int | None = None

    @field_validator("p_grid")
    @classmethod
    def _grid(cls, grid):
        if not grid:
            raise ValueError("p_grid must hold at least one parameter vector")
        for vec in grid:
            _check_probs(vec)
        return grid


class IdentityReportModel(BaseModel):
    name: str
    cases: int
    max_abs_err: float
    tolerance: float
    passed: bool


class VerifyResponse(BaseModel):
    reports: list[IdentityReportModel]
    all_passed: bool


class McRequest(BaseModel):
    metric: str
    n: int = Field(ge=0)
    r: int = Field(ge=0)
    p: list[float]
    seed: int = 0
    trials: int = Field(default=1000, ge=1)

    _probs = field_validator("p")(_check_probs)


class ReportModel(BaseModel):
    metric: str
    estimate: float
    ci_low: float
    ci_high: float
    trials: int
    seed: int
    verdict: str | None = None


class SweepRequest(BaseModel):
    alpha0: list[float]
    alpha1: list[float]
    alpha2: list[float]
    n: int = Field(ge=1)
    trials: int = Field(ge=1)
    metric: str
    seed: int = 0


class SweepRow(BaseModel):
    alpha0: float
    alpha1: float
    alpha2: float
    n: int
    trials: int
    metric: str
    estimate: float
    ci_low: float
    ci_high: float
    regime: str


class SweepResponse(BaseModel):
    rows: list[SweepRow]
    csv: str


class CheckRequest(BaseModel):
    what: str
    complexes: list[ComplexModel]


class CheckResponse(BaseModel):
    verdicts: list[dict]


class LinkLawRequest(BaseModel):
    p: list[float]
    k: int = Field(ge=0)

    _probs = field_validator("p")(_check_probs)


class LinksIntersectionRequest(BaseModel):
    p: list[float]
    k: int = Field(ge=1)

    _probs = field_validator("p")(_check_probs)


class IntersectionLawRequest(BaseModel):
    p: list[float]
    q: list[float]

    _p = field_validator("p")(_check_probs)
    _q = field_validator("q")(_check_probs)


class RestrictionLawRequest(BaseModel):
    p: list[float]

    _probs = field_validator("p")(_check_probs)


class VectorResponse(BaseModel):
    p: list[float]


class DegreeLawRequest(BaseModel):
    p: list[float]
    n: int = Field(ge=1)
    k: int = Field(ge=0)

    _probs = field_validator("p")(_check_probs)


class DegreeLawResponse(BaseModel):
    trials: int
    success: float
    mean: float


class PresetRequest(BaseModel):
    name: str
    p: float = Field(ge=0.0, le=1.0)
    r: int | None = Field(default=None, ge=1)
