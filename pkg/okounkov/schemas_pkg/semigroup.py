from typing import Dict, List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from okounkov.schemas_pkg.common import Q
from okounkov.schemas_pkg.polytope import PolytopeSchema
from okounkov.services.valuation_orders import MonomialOrder


class SemigroupInput(BaseModel):
    """Graded valuation data: per level, one record of N valuation vectors per section."""

    n: int = Field(ge=1, le=3)
    N: int = Field(ge=1)
    order: MonomialOrder = MonomialOrder.DEGLEX
    levels: Dict[int, List[List[List[int]]]]
    h0: Optional[Dict[int, int]] = None
    k_max: Optional[int] = Field(default=None, ge=1)

    @field_validator("levels")
    @classmethod
    def check_level_keys(cls, v):
        if any(k < 1 for k in v):
            raise ValueError("levels must be positive integers")
        return v

    @model_validator(mode="after")
    def check_records(self):
        for k, records in self.levels.items():
            for rec in records:
                if len(rec) != self.N:
                    raise ValueError(f"level {k}: record with {len(rec)} valuations, expected {self.N}")
                if any(len(val) != self.n for val in rec):
                    raise ValueError(f"level {k}: valuation vector of the wrong dimension")
        return self


class LevelHullSchema(BaseModel):
    k: int
    hull: PolytopeSchema


class SemigroupBodySchema(BaseModel):
    j: int
    k_max: int
    levels: List[LevelHullSchema]
    limit_hull: PolytopeSchema
    limit_volume: Q
    w_counts: Dict[int, List[int]] = {}
    volume_sequence: List[List[Q]] = []
