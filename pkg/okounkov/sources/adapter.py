"""
Body source base class.
Gives the Seshadri fit one interface over toric, del Pezzo and P^2 bodies.
"""
from abc import ABC, abstractmethod
from enum import Enum
from fractions import Fraction
from typing import List

from okounkov.core.geometry import Polytope
from okounkov.services.seshadri import BodyFamily


class BodySourceKind(str, Enum):
    """Supported body sources."""
    TORIC = "toric"
    SURFACE = "surface"
    P2_FORMULA = "p2_formula"


class BodySource(ABC):
    """
    A family of multipoint Okounkov bodies together with the volume of the
    line bundle they come from.
    """

    kind: BodySourceKind

    @abstractmethod
    def bodies(self) -> List[Polytope]:
        """
        Bodies in the coordinates the simplex fit reads.

        Returns:
            One polytope per chosen point, in point order. Toric bodies are in
            vertex-chart coordinates, surface bodies in deglex coordinates.
        """
        pass

    @abstractmethod
    def volume_total(self) -> Fraction:
        """
        Volume of the underlying line bundle.

        Returns:
            n! * vol(P) for toric input, L^2 for surfaces
        """
        pass

    @abstractmethod
    def label(self) -> str:
        """Short human-readable description used in logs and reports."""
        pass

    def family(self) -> BodyFamily:
        return BodyFamily.of(self.bodies())

    def __repr__(self):
        return f"<{self.__class__.__name__}({self.label()})>"
