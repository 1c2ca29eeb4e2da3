from typing import List, Optional

from pydantic import BaseModel, Field, model_validator

from okounkov.config import settings
from okounkov.schemas_pkg.common import Q, QVector
from okounkov.schemas_pkg.polytope import PolytopeSchema


class ToricInputSchema(BaseModel):
    vertices: List[List[int]]
    chosen: Optional[List[int]] = None  # indices into ``vertices``; all when omitted
    k_max: int = Field(default_factory=lambda: settings.DEFAULT_K_MAX, ge=1)

    @model_validator(mode="after")
    def check_shape(self):
        if not self.vertices:
            raise ValueError("vertices must not be empty")
        dims = {len(v) for v in self.vertices}
        if len(dims) != 1 or dims.pop() not in (2, 3):
            raise ValueError("vertices must all have dimension 2 or all dimension 3")
        if self.chosen is not None:
            if not self.chosen:
                raise ValueError("chosen must not be empty")
            if len(set(self.chosen)) != len(self.chosen):
                raise ValueError("chosen indices must be distinct")
            if any(not 0 <= i < len(self.vertices) for i in self.chosen):
                raise ValueError("chosen index out of range")
        return self


class ChartSchema(BaseModel):
    vertex: QVector
    edge_directions: List[List[int]]
    edge_lengths: List[int]
    inverse_basis: List[QVector]


class ToricBodySchema(BaseModel):
    j: int
    chart: ChartSchema
    cell: PolytopeSchema
    body: PolytopeSchema
    volume: Q


class ToricDetails(BaseModel):
    bodies: List[ToricBodySchema]
    seshadri_closed_form: Q
    jet_separation: List[int]
    meeting_point: Optional[QVector] = None
