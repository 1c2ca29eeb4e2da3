# okounkov/schemas_pkg/__init__.py

# Geometry
from .common import Q, QVector
from .polytope import HalfspaceSchema, PolytopeSchema

# Inputs
from .toric import ToricInputSchema
from .surface import SurfaceInputSchema
from .semigroup import SemigroupInput

# Jobs and reports
from .jobs import JobConfig, JobMode
from .report import BodyEntry, CheckEntry, Report, Timings, WitnessSchema

__all__ = [
    # Geometry
    "Q",
    "QVector",
    "HalfspaceSchema",
    "PolytopeSchema",

    # Inputs
    "ToricInputSchema",
    "SurfaceInputSchema",
    "SemigroupInput",

    # Jobs and reports
    "JobConfig",
    "JobMode",
    "BodyEntry",
    "CheckEntry",
    "Report",
    "Timings",
    "WitnessSchema",
]
