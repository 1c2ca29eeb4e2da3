from typing import Dict, List, Optional

from pydantic import BaseModel

from okounkov.schemas_pkg.common import Q
from okounkov.schemas_pkg.jobs import JobMode
from okounkov.schemas_pkg.polytope import PolytopeSchema
from okounkov.schemas_pkg.semigroup import SemigroupBodySchema
from okounkov.schemas_pkg.surface import SurfaceDetails
from okounkov.schemas_pkg.toric import ToricDetails


class CheckEntry(BaseModel):
    name: str
    lhs: str
    rhs: str
    relation: str
    passed: bool
    detail: Optional[str] = None


class BodyEntry(BaseModel):
    label: str
    polytope: PolytopeSchema
    volume: Q


class WitnessSchema(BaseModel):
    body: Optional[int] = None
    facet: Optional[int] = None


class Report(BaseModel):
    """Canonical job output; carries no timestamps so reruns are byte-identical."""

    mode: JobMode
    app_version: str
    bodies: List[BodyEntry] = []
    volumes: Dict[str, Q] = {}
    xi: Optional[Q] = None
    witness: Optional[WitnessSchema] = None
    capacity_note: Optional[str] = None
    upper_bound_ok: Optional[bool] = None
    certificate_ok: Optional[bool] = None
    checks: List[CheckEntry] = []
    toric: Optional[ToricDetails] = None
    surface: Optional[SurfaceDetails] = None
    semigroup: Optional[List[SemigroupBodySchema]] = None


class Timings(BaseModel):
    job_id: str
    mode: JobMode
    seconds: Dict[str, float]
