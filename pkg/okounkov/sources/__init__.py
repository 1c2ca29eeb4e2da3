"""Body sources for the Seshadri fit."""
from .adapter import BodySource, BodySourceKind
from .dispatcher import BodySourceDispatcher
from .surface_source import P2FormulaSource, SurfaceBodySource
from .toric_source import ToricBodySource

__all__ = [
    "BodySource",
    "BodySourceKind",
    "BodySourceDispatcher",
    "P2FormulaSource",
    "SurfaceBodySource",
    "ToricBodySource",
]
