"""Bodies of blow-ups of P^2: computed from a curve list, or the N >= 9 closed form."""
from fractions import Fraction
from functools import cached_property
from typing import List, Optional, Sequence

from okounkov.config import settings
from okounkov.core.geometry import Polytope
from okounkov.errors import OutOfRangeError
from okounkov.schemas_pkg.surface import SurfaceInputSchema
from okounkov.services.picard import PicardClass, SurfaceSpec
from okounkov.services.surface_bodies import p2_body_formula, surface_bodies, truncation_point
from okounkov.services.zariski import RayDecomposition, ray_breakpoints, volume_of

from .adapter import BodySource, BodySourceKind


def surface_spec_from_schema(schema: SurfaceInputSchema) -> SurfaceSpec:
    if schema.curves == "delpezzo":
        if schema.N > settings.MAX_DELPEZZO_POINTS:
            raise OutOfRangeError(
                f"automatic curve lists stop at N={settings.MAX_DELPEZZO_POINTS}; supply curves for N={schema.N}"
            )
        return SurfaceSpec.delpezzo(schema.N)
    return SurfaceSpec.user(schema.N, (PicardClass.from_list(c) for c in schema.curves))


def line_bundle_from_schema(schema: SurfaceInputSchema) -> PicardClass:
    if schema.L is None:
        return PicardClass.hyperplane(schema.N)
    return PicardClass.from_list(schema.L)


class SurfaceBodySource(BodySource):
    kind = BodySourceKind.SURFACE

    def __init__(self, spec: SurfaceSpec, L: PicardClass, t_values: Sequence[Fraction] = ()):
        self.spec = spec
        self.L = L
        self.t_values = tuple(t_values)

    @cached_property
    def _ray(self) -> RayDecomposition:
        return ray_breakpoints(self.spec, self.L)

    @cached_property
    def upto(self) -> Optional[Fraction]:
        """Truncation of the bodies, set only when mu is irrational."""
        return truncation_point(self._ray, self.t_values)

    @cached_property
    def _bodies(self) -> List[Polytope]:
        return [b.body_deglex_coords for b in surface_bodies(self.spec, self.L, self.upto)]

    def bodies(self) -> List[Polytope]:
        return list(self._bodies)

    def volume_total(self) -> Fraction:
        if self.upto is None:
            return volume_of(self.spec, self.L)
        return volume_of(self.spec, self.L) - volume_of(self.spec, self.L - self._ray.G * self.upto)

    def label(self) -> str:
        cut = "" if self.upto is None else f" t<={self.upto}"
        return f"surface N={self.spec.N} L=({self.L}) curves={len(self.spec.curves)}{cut}"


class P2FormulaSource(BodySource):
    """N >= 9 very general points with the Seshadri constant of H supplied."""

    kind = BodySourceKind.P2_FORMULA

    def __init__(self, N: int, epsilon: Fraction):
        self.formula = p2_body_formula(N, epsilon)

    def bodies(self) -> List[Polytope]:
        return [self.formula.body] * self.formula.N

    def volume_total(self) -> Fraction:
        return Fraction(1)

    def label(self) -> str:
        return f"p2 N={self.formula.N} epsilon={self.formula.epsilon}"
