"""
Simplex fit over a family of multipoint bodies, Okounkov-domain volumes and
the scaling, superadditivity and volume bounds the fit must satisfy.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import sympy as sp

from okounkov.config import settings
from okounkov.core.geometry import Polytope, contains, dilate, volume
from okounkov.core.rational import RationalLike, to_rational
from okounkov.errors import DimensionMismatchError, GeometryError, InvariantError
from okounkov.logging_config import get_logger
from okounkov.services.check_registry import CheckResult

logger = get_logger(__name__)

CAPACITY_NOTE = (
    "xi is the simplex parameter: the largest t with t*Sigma_n inside every body. "
    "Under mu(z) = (|z_1|^2, ..., |z_n|^2) the ball B_r maps onto r^2*Sigma_n, "
    "so the matching ball radius is sqrt(xi)."
)


@dataclass(frozen=True)
class BodyFamily:
    bodies: Tuple[Polytope, ...]
    n: int

    def __post_init__(self):
        if not self.bodies:
            raise GeometryError("a body family needs at least one body")
        for idx, body in enumerate(self.bodies):
            if body.dim != self.n:
                raise DimensionMismatchError(f"body {idx} has dimension {body.dim}, family has {self.n}")
            if any(x < 0 for v in body.vertices for x in v):
                raise GeometryError(f"body {idx} leaves the nonnegative orthant")

    @classmethod
    def of(cls, bodies: Sequence[Polytope]) -> "BodyFamily":
        bodies = tuple(b.with_coordinate_facets() for b in bodies)
        if not bodies:
            raise GeometryError("a body family needs at least one body")
        return cls(bodies, bodies[0].dim)

    def dilated(self, k: RationalLike) -> "BodyFamily":
        return BodyFamily(tuple(dilate(b, k) for b in self.bodies), self.n)


@dataclass(frozen=True)
class SeshadriResult:
    xi: Fraction
    witness_body: Optional[int]
    witness_facet: Optional[int]
    capacity_note: str = CAPACITY_NOTE


def xi_simplex_fit(fam: BodyFamily) -> SeshadriResult:
    """
    Largest t with 0 and every t*e_i inside every body. A constraint a.x <= b
    bounds t by b / max(a) when max(a) > 0; a body missing the origin or empty
    forces 0.
    """
    best: Optional[Tuple[Fraction, int, Optional[int]]] = None
    for idx, body in enumerate(fam.bodies):
        if body.is_empty:
            best = (Fraction(0), idx, None)
            break
        for h_idx, h in enumerate(body.halfspaces):
            top = max(h.normal)
            if h.offset < 0:
                bound = Fraction(0)
            elif top > 0:
                bound = h.offset / top
            else:
                continue
            if best is None or bound < best[0]:
                best = (bound, idx, h_idx)
    if best is None:
        raise InvariantError("no constraint bounds the simplex; a body is unbounded")
    xi, body_idx, facet_idx = best
    logger.debug("xi_simplex_fit", xi=str(xi), body=body_idx, facet=facet_idx)
    return SeshadriResult(max(xi, Fraction(0)), body_idx, facet_idx)


def _simplex_fits(fam: BodyFamily, t: Fraction) -> bool:
    corners = [(Fraction(0),) * fam.n] + [
        tuple(t if i == c else Fraction(0) for i in range(fam.n)) for c in range(fam.n)
    ]
    return all(contains(body, x) for body in fam.bodies for x in corners)


def simplex_certificate(fam: BodyFamily, result: SeshadriResult, denominator: Optional[int] = None) -> bool:
    """xi passes on every body, and xi + 1/denominator fails on at least one."""
    denominator = denominator or settings.CERTIFICATE_DENOMINATOR
    if any(b.is_empty for b in fam.bodies):
        return result.xi == 0
    return _simplex_fits(fam, result.xi) and not _simplex_fits(fam, result.xi + Fraction(1, denominator))


@dataclass(frozen=True)
class DomainVolume:
    n: int
    lebesgue_coefficient: Fraction  # times pi^n
    symplectic: Fraction

    @property
    def lebesgue(self) -> sp.Expr:
        q = self.lebesgue_coefficient
        return sp.Rational(q.numerator, q.denominator) * sp.pi ** self.n


def okounkov_domain_volume(body: Polytope) -> DomainVolume:
    """Volumes of the preimage of the body under the moment map of C^n."""
    if any(x < 0 for v in body.vertices for x in v):
        raise GeometryError("body leaves the nonnegative orthant")
    vol = volume(body) if not body.is_empty else Fraction(0)
    return DomainVolume(body.dim, vol, math.factorial(body.dim) * vol)


def upper_bound_check(fam: BodyFamily, vol_total: RationalLike) -> bool:
    """xi^n <= Vol(L) / N."""
    xi = xi_simplex_fit(fam).xi
    return xi ** fam.n <= to_rational(vol_total) / len(fam.bodies)


def packing_volume_check(fam: BodyFamily, vol_total: RationalLike) -> Tuple[Fraction, Fraction, bool]:
    """Summed symplectic volumes of the Okounkov domains against Vol(L)."""
    lhs = sum((okounkov_domain_volume(b).symplectic for b in fam.bodies), Fraction(0))
    rhs = to_rational(vol_total)
    return lhs, rhs, lhs == rhs


def seshadri_property_suite(
    fam_L: BodyFamily,
    fam_scaled: BodyFamily,
    scale: RationalLike,
    sum_family: Optional[BodyFamily] = None,
    summands: Sequence[BodyFamily] = (),
) -> List[CheckResult]:
    """Homogeneity under scaling L, and superadditivity when a sum family is given."""
    scale = to_rational(scale)
    xi = xi_simplex_fit(fam_L).xi
    results = [
        CheckResult.compare("xi_homogeneity", xi_simplex_fit(fam_scaled).xi, scale * xi, "=", f"scale {scale}"),
    ]
    if sum_family is not None:
        parts = sum((xi_simplex_fit(f).xi for f in summands), Fraction(0))
        results.append(CheckResult.compare("xi_superadditivity", xi_simplex_fit(sum_family).xi, parts, ">="))
    return results
