from typing import List, Literal, Optional, Union

from pydantic import BaseModel, Field, model_validator

from okounkov.schemas_pkg.common import Q, QVector
from okounkov.schemas_pkg.polytope import PolytopeSchema


class SurfaceInputSchema(BaseModel):
    N: int = Field(ge=1)
    curves: Union[Literal["delpezzo"], List[QVector]] = "delpezzo"
    L: Optional[QVector] = None  # [d, m_1, ..., m_N]; H when omitted
    rays: bool = True
    epsilon: Optional[Q] = None
    t_values: List[Q] = []

    @model_validator(mode="after")
    def check_shape(self):
        if self.L is not None and len(self.L) != self.N + 1:
            raise ValueError(f"L needs {self.N + 1} coefficients [d, m_1, ..., m_N]")
        if isinstance(self.curves, list) and any(len(c) != self.N + 1 for c in self.curves):
            raise ValueError(f"every curve needs {self.N + 1} coefficients")
        if self.epsilon is not None and self.N < 9:
            raise ValueError("epsilon is only read for N >= 9")
        return self


class ZariskiSchema(BaseModel):
    D: QVector
    P: QVector
    Nneg: QVector
    support: List[int]
    coefficients: List[Q]
    volume: Q


class ThresholdSchema(BaseModel):
    value: str
    rational: Optional[Q] = None
    quadratic: List[Q]


class LinearPieceSchema(BaseModel):
    start: Q
    end: Q
    intercept: Q
    slope: Q


class SurfaceBodySchema(BaseModel):
    j: int
    breakpoints: List[Q]
    beta: List[LinearPieceSchema]
    body_blowup: PolytopeSchema
    body_deglex: PolytopeSchema
    area: Q


class SliceSchema(BaseModel):
    t: Q
    lengths: List[Q]


class SurfaceDetails(BaseModel):
    N: int
    curve_count: int
    provenance: str
    zariski: Optional[ZariskiSchema] = None
    breakpoints: List[Q] = []
    mu: Optional[ThresholdSchema] = None
    chamber_count: Optional[int] = None
    bodies: List[SurfaceBodySchema] = []
    slices: List[SliceSchema] = []
    truncated_at: Optional[Q] = None  # set when mu is irrational
    epsilon: Optional[Q] = None
    profile: List[LinearPieceSchema] = []
