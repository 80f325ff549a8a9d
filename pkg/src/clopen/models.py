"""Pydantic request/response models shared by the HTTP service and the CLI."""

from __future__ import annotations

from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .errors import InvalidSpaceError
from .topo import FiniteSpace


class SpaceIn(BaseModel):
    """A finite space as JSON: exactly one of opens/subbasis."""

    n: int = Field(ge=0)
    opens: Optional[list[list[int]]] = None
    subbasis: Optional[list[list[int]]] = None

    @model_validator(mode="after")
    def _exactly_one(self):
        if (self.opens is None) == (self.subbasis is None):
            raise ValueError("provide exactly one of 'opens' / 'subbasis'")
        return self

    def to_space(self) -> FiniteSpace:
        if self.opens is not None:
            return FiniteSpace.from_opens(self.n, self.opens)
        return FiniteSpace.from_subbasis(self.n, self.subbasis)


class RingRequest(BaseModel):
    desc: str


class SpaceRequest(BaseModel):
    space: SpaceIn


class CheckReportOut(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    check: str
    instance: str
    passed: bool = Field(alias="pass")
    witness: Any = None


class SuiteResponse(BaseModel):
    passed: bool
    reports: list[CheckReportOut]


class IdempotentsResponse(BaseModel):
    ring: str
    idempotents: list[str]
    primitive: list[str]


class DecomposeResponse(BaseModel):
    ring: str
    primitive_idempotents: list[str]
    factors: list[str]
    iso_verified: bool


class SpectrumResponse(BaseModel):
    ring: str
    points: list[str]
    opens: list[list[int]]
    discrete: bool


class ComponentsResponse(BaseModel):
    n: int
    components: list[list[int]]
    quasi_components: list[list[int]]
    clopens: list[list[int]]
    integer_function_basis: list[list[int]]


class StoneResponse(BaseModel):
    components: list[list[int]]
    spectrum_points: int
    point_map: list[int]
    homeomorphism: bool
    clopen_count: int


class DotResponse(BaseModel):
    dot: str


class QspecResponse(BaseModel):
    ring: str
    points: list[str]
    opens: list[list[int]]
    sober: bool
    witness: Optional[dict] = None


class ProjWitnessRequest(BaseModel):
    char: int
    f: str = "x-y"
    g: str = "x+y"
    nilpotency_bound: int = Field(default=16, ge=1, le=64)
    fixture: str = Field(default="square-swap", pattern="^(square-swap|annihilating-product)$")


class ProjWitnessResponse(BaseModel):
    verdict: str
    certificates: list[dict]
    reason: Optional[str] = None


class ProjLiftRequest(BaseModel):
    desc: str
    dim: int = Field(ge=0, le=8)


class VerifyRequest(BaseModel):
    max_points: int = Field(default=4, ge=1)
    max_modulus: int = Field(default=10000, ge=1)
    max_table_size: int = Field(default=16, ge=1)
    seed: int = 0
    jobs: int = Field(default=1, ge=1, le=16)
    fiber_samples: int = Field(default=10000, ge=1)


class VerifyResponse(BaseModel):
    passed: bool
    reports: list[CheckReportOut]


def space_from_json_dict(data: dict) -> FiniteSpace:
    try:
        model = SpaceIn.model_validate(data)
    except Exception as exc:
        raise InvalidSpaceError(str(exc)) from exc
    return model.to_space()
