"""Bodies of a Delzant polytope at chosen torus-fixed points."""
import math
from fractions import Fraction
from functools import cached_property
from typing import List

from okounkov.core.geometry import Polytope, volume
from okounkov.schemas_pkg.toric import ToricInputSchema
from okounkov.services.toric_bodies import ToricInput, toric_bodies

from .adapter import BodySource, BodySourceKind


def toric_input_from_schema(schema: ToricInputSchema) -> ToricInput:
    return ToricInput.from_points(schema.vertices, schema.chosen)


class ToricBodySource(BodySource):
    kind = BodySourceKind.TORIC

    def __init__(self, inp: ToricInput):
        self.inp = inp

    @cached_property
    def _bodies(self) -> List[Polytope]:
        return toric_bodies(self.inp)

    def bodies(self) -> List[Polytope]:
        return list(self._bodies)

    def volume_total(self) -> Fraction:
        return math.factorial(self.inp.n) * volume(self.inp.polytope.base)

    def label(self) -> str:
        return f"toric n={self.inp.n} vertices={len(self.inp.polytope.vertices)} chosen={len(self.inp.chosen)}"
