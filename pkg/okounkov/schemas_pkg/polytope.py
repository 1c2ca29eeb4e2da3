from typing import List

from pydantic import BaseModel, Field, model_validator

from okounkov.core.geometry import Polytope
from okounkov.schemas_pkg.common import Q, QVector


class HalfspaceSchema(BaseModel):
    normal: QVector
    offset: Q


class PolytopeSchema(BaseModel):
    dim: int = Field(ge=1, le=3)
    vertices: List[QVector] = []
    halfspaces: List[HalfspaceSchema] = []
    coordinate_facets: List[int] = []

    @model_validator(mode="after")
    def check_shapes(self):
        if any(len(v) != self.dim for v in self.vertices):
            raise ValueError("vertex of the wrong dimension")
        if any(len(h.normal) != self.dim for h in self.halfspaces):
            raise ValueError("halfspace normal of the wrong dimension")
        if any(not 0 <= i < len(self.halfspaces) for i in self.coordinate_facets):
            raise ValueError("coordinate facet index out of range")
        return self

    @classmethod
    def from_polytope(cls, P: Polytope) -> "PolytopeSchema":
        return cls(
            dim=P.dim,
            vertices=[list(v) for v in P.vertices],
            halfspaces=[HalfspaceSchema(normal=list(h.normal), offset=h.offset) for h in P.halfspaces],
            coordinate_facets=sorted(P.coordinate_facets),
        )
