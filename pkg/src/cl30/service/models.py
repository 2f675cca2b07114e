"""Request/response schemas for the HTTP service and the CLI.

Wire formats: a cliffor is an 8-number array in the order
``[s, v1, v2, v3, b1, b2, b3, p]``; a vector is a 3-number array; an
axis-angle is ``{"axis": [...], "angle": ...}``; a complex 2x2 matrix is a
2x2 array whose entries are ``[re, im]`` pairs (plain numbers are accepted on
input and read as reals); a group-algebra element maps element labels to
coefficients, omitted labels meaning zero.
"""

from __future__ import annotations

from typing import Any, Optional, Union

from pydantic import BaseModel, Field, field_validator, model_validator

Number = Union[int, float]


class AxisAngleModel(BaseModel):
    axis: list[float] = Field(min_length=3, max_length=3)
    angle: float


class ComposeRequest(BaseModel):
    theta1: AxisAngleModel
    theta2: AxisAngleModel


class ComposeResponse(BaseModel):
    axis: list[float]
    angle: float
    degenerate: bool
    rotor: list[float]


class RotateRequest(BaseModel):
    theta: AxisAngleModel
    vector: list[float] = Field(min_length=3, max_length=3)


class VectorResponse(BaseModel):
    vector: list[float]


class ApplyRequest(BaseModel):
    element: str
    vector: list[float] = Field(min_length=3, max_length=3)


class ApplyResponse(BaseModel):
    element: str
    vector: list[float]


MatrixEntry = Union[Number, list[Number]]


class DecomposeRequest(BaseModel):
    matrix: list[list[MatrixEntry]] = Field(min_length=2, max_length=2)

    @field_validator("matrix")
    @classmethod
    def _two_columns(cls, value):
        for row in value:
            if len(row) != 2:
                raise ValueError("matrix must be 2x2")
        return value


class DecomposeResponse(BaseModel):
    fermion: dict[str, list[float]]
    cliffor: list[float]


class ChainStepModel(BaseModel):
    model_config = {"extra": "allow"}

    ket: Optional[Any] = None
    scale: Optional[Any] = None


class ChainRequest(BaseModel):
    vector: Optional[list[float]] = Field(default=None, min_length=3, max_length=3)
    cliffor: Optional[list[float]] = Field(default=None, min_length=8, max_length=8)
    steps: list[ChainStepModel] = Field(default_factory=list)

    @model_validator(mode="after")
    def _one_operand(self):
        if (self.vector is None) == (self.cliffor is None):
            raise ValueError("provide exactly one of 'vector' or 'cliffor'")
        return self


class ChainResponse(BaseModel):
    cliffor: list[float]
    vector: Optional[list[float]] = None


class TableResponse(BaseModel):
    order: list[str]
    table: list[list[str]]
    text: str


class OperatorMatrixModel(BaseModel):
    name: str
    matrix: list[list[list[float]]]
    ket: str
    bra: str
    pseudoscalar_factor: bool
    negative_partner: Optional[str] = None
    note: str


class PauliResponse(BaseModel):
    pauli: list[OperatorMatrixModel]
    campbell: list[OperatorMatrixModel]
    convention: str


class VerifyRequest(BaseModel):
    seed: int = 0
    tol: Optional[float] = None


class CheckModel(BaseModel):
    name: str
    passed: bool
    detail: str


class VerifyResponse(BaseModel):
    ok: bool
    passed: int
    total: int
    checks: list[CheckModel]


class ErrorResponse(BaseModel):
    error: str
    message: str
