"""Request and response models for the HTTP service.

Half-integers travel as strings like "3/2" (or plain integers); they are
parsed by the exact-arithmetic layer so no 0.5-style rounding ambiguity
enters.  Responses all share the OutputRecord shape the CLI prints.
"""

from __future__ import annotations

from typing import Any, Union

from pydantic import BaseModel, Field

HalfIntInput = Union[str, int]


class HarmonicRequest(BaseModel):
    j: HalfIntInput
    m: HalfIntInput
    mu: HalfIntInput
    theta: float
    phi: float


class Wigner3jRequest(BaseModel):
    j1: HalfIntInput
    j2: HalfIntInput
    j3: HalfIntInput
    m1: HalfIntInput
    m2: HalfIntInput
    m3: HalfIntInput


class GaugeCheckRequest(BaseModel):
    samples: int = Field(default=100, ge=1)
    seed: int = 42
    variant: str = "direct"
    tolerance: float = Field(default=1e-10, gt=0.0)


class SelectionTableRequest(BaseModel):
    j_max: HalfIntInput
    mu: HalfIntInput = "1/2"
    operator: str = "pseudoscalar"
    n_theta: int = Field(default=64, ge=2)
    n_phi: int = Field(default=64, ge=2)


class OrthonormalityRequest(BaseModel):
    mu: HalfIntInput = "1/2"
    j_max: HalfIntInput = "3/2"
    n_theta: int = Field(default=64, ge=2)
    n_phi: int = Field(default=64, ge=2)
    tolerance: float = Field(default=1e-9, gt=0.0)


class OutputRecordModel(BaseModel):
    command: str
    parameters: dict[str, Any]
    results: dict[str, Any]
    tolerances: dict[str, float]
    passed: bool
