"""
Multipoint Okounkov bodies of blow-ups of P^2.

With the exceptional curve E_j as first flag element and a generic point on
it, the body at p_j is {0 <= t <= t_+, 0 <= y <= beta_j(t)} where
beta_j(t) = P_t . E_j along the ray L - t * sum(E_i). Deglex coordinates are
the preimage under F(x1, x2) = (x1 + x2, x1).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from okounkov.config import settings
from okounkov.core.geometry import Polytope, convex_hull, linear_image, slice_at, volume
from okounkov.core.rational import RationalLike, to_rational
from okounkov.errors import InvariantError, OutOfRangeError, PreconditionError
from okounkov.logging_config import get_logger
from okounkov.services.picard import PicardClass, SurfaceSpec, intersect, self_intersection
from okounkov.services.zariski import RayDecomposition, Threshold, ray_breakpoints, volume_of, zariski

logger = get_logger(__name__)

# deglex coordinates -> blow-up coordinates (t, y), and back
F = ((1, 1), (1, 0))
F_INV = ((0, 1), (1, -1))


@dataclass(frozen=True)
class LinearPiece:
    start: Fraction
    end: Fraction
    intercept: Fraction
    slope: Fraction

    def __call__(self, t: Fraction) -> Fraction:
        return self.intercept + self.slope * t

    def integral(self, a: Fraction, b: Fraction) -> Fraction:
        return self.intercept * (b - a) + self.slope * (b * b - a * a) / 2


@dataclass(frozen=True)
class PiecewiseLinear:
    pieces: Tuple[LinearPiece, ...]

    def __post_init__(self):
        if not self.pieces:
            raise PreconditionError("piecewise linear function without pieces")
        for left, right in zip(self.pieces, self.pieces[1:]):
            if left.end != right.start:
                raise PreconditionError("pieces are not contiguous")
        if any(p.start >= p.end for p in self.pieces):
            raise PreconditionError("piece with an empty interval")

    @property
    def start(self) -> Fraction:
        return self.pieces[0].start

    @property
    def end(self) -> Fraction:
        return self.pieces[-1].end

    @property
    def breakpoints(self) -> Tuple[Fraction, ...]:
        return tuple(p.start for p in self.pieces) + (self.end,)

    def __call__(self, t: RationalLike) -> Fraction:
        t = to_rational(t)
        for piece in self.pieces:
            if piece.start <= t <= piece.end:
                return piece(t)
        raise OutOfRangeError(f"t = {t} outside [{self.start}, {self.end}]")

    def integral(self, a: Optional[RationalLike] = None, b: Optional[RationalLike] = None) -> Fraction:
        a = self.start if a is None else to_rational(a)
        b = self.end if b is None else to_rational(b)
        if not self.start <= a <= b <= self.end:
            raise OutOfRangeError(f"[{a}, {b}] is not inside [{self.start}, {self.end}]")
        total = Fraction(0)
        for piece in self.pieces:
            lo, hi = max(a, piece.start), min(b, piece.end)
            if lo < hi:
                total += piece.integral(lo, hi)
        return total

    def is_continuous(self) -> bool:
        return all(left(left.end) == right(right.start) for left, right in zip(self.pieces, self.pieces[1:]))

    def is_concave(self) -> bool:
        slopes = [p.slope for p in self.pieces]
        return self.is_continuous() and all(a >= b for a, b in zip(slopes, slopes[1:]))


@dataclass(frozen=True)
class SurfaceRayBody:
    j: int
    breakpoints: Tuple[Fraction, ...]
    beta: PiecewiseLinear
    body_blowup_coords: Polytope
    body_deglex_coords: Polytope
    mu: Threshold

    @property
    def area(self) -> Fraction:
        return volume(self.body_blowup_coords)


def _exceptional_index(spec: SurfaceSpec, j: int) -> Optional[int]:
    E = spec.exceptional(j)
    return spec.curves.index(E) if E in spec.curves else None


def beta_profile(ray: RayDecomposition, j: int, end: Fraction) -> PiecewiseLinear:
    """beta_j(t) = P_t . E_j on [0, end], one piece per ray segment."""
    E = PicardClass.exceptional(j, ray.L.N)
    pieces = []
    for seg in ray.segments:
        hi = end if seg.end is None else min(seg.end, end)
        if seg.start >= hi:
            continue
        pieces.append(LinearPiece(seg.start, hi, intersect(seg.P0, E), intersect(seg.P1, E)))
    return PiecewiseLinear(tuple(pieces))


def _resolve_end(ray: RayDecomposition, upto: Optional[RationalLike]) -> Fraction:
    if upto is None:
        return ray.mu.rational
    end = to_rational(upto)
    if end <= 0 or not ray.mu.at_least(end):
        raise OutOfRangeError(f"truncation {end} outside (0, mu = {ray.mu}]")
    return end


def truncation_point(ray: RayDecomposition, t_values: Sequence[RationalLike] = ()) -> Optional[Fraction]:
    """
    None when mu is rational. Otherwise the largest requested t in (0, mu],
    or the largest multiple of 1/CERTIFICATE_DENOMINATOR below mu.
    """
    if ray.mu.is_rational:
        return None
    inside = [t for t in (to_rational(x) for x in t_values) if t > 0 and ray.mu.at_least(t)]
    return max(inside) if inside else ray.mu.lower_bound(settings.CERTIFICATE_DENOMINATOR)


def surface_body(
    spec: SurfaceSpec,
    L: PicardClass,
    j: int,
    upto: Optional[RationalLike] = None,
    ray: Optional[RayDecomposition] = None,
) -> SurfaceRayBody:
    """
    Body at p_j. ``upto`` truncates at a rational t <= mu, which is required
    when mu is irrational.
    """
    if not 0 <= j < spec.N:
        raise OutOfRangeError(f"point index {j} outside 0..{spec.N - 1}")
    ray = ray or ray_breakpoints(spec, L)
    e_idx = _exceptional_index(spec, j)
    if e_idx is not None and e_idx in zariski(spec, L).support:
        raise PreconditionError(f"E_{j + 1} lies in the negative part of L; p_{j + 1} is in the augmented base locus")

    beta = beta_profile(ray, j, _resolve_end(ray, upto))
    if beta(beta.start) != 0:
        raise PreconditionError(f"L meets E_{j + 1}; L must be pulled back from P^2 at p_{j + 1}")
    if not beta.is_concave():
        raise InvariantError(f"beta_{j + 1} is not concave", {"slopes": [str(p.slope) for p in beta.pieces]})

    points = [(t, Fraction(0)) for t in beta.breakpoints] + [(t, beta(t)) for t in beta.breakpoints]
    blowup = convex_hull(points)
    if volume(blowup) != beta.integral():
        raise InvariantError(f"body area differs from the integral of beta_{j + 1}")
    deglex = linear_image(blowup, F_INV, (0, 0))
    logger.debug("surface_body_built", j=j, breakpoints=[str(t) for t in beta.breakpoints])
    return SurfaceRayBody(j, beta.breakpoints, beta, blowup, deglex, ray.mu)


def surface_bodies(spec: SurfaceSpec, L: PicardClass, upto: Optional[RationalLike] = None) -> List[SurfaceRayBody]:
    ray = ray_breakpoints(spec, L)
    return [surface_body(spec, L, j, upto, ray) for j in range(spec.N)]


def restricted_volume_slice(spec: SurfaceSpec, L: PicardClass, j: int, t: RationalLike) -> Fraction:
    """Length of the body's slice at first coordinate t; equals P_t . E_j."""
    t = to_rational(t)
    ray = ray_breakpoints(spec, L)
    if t < 0 or not ray.mu.exceeds(t):
        raise OutOfRangeError(f"t = {t} outside [0, mu = {ray.mu})")
    body = surface_body(spec, L, j, upto=None if ray.mu.is_rational else t, ray=ray)
    length = volume(slice_at(body.body_blowup_coords, 0, t))
    if length != intersect(ray.positive_part(t), spec.exceptional(j)):
        raise InvariantError(f"slice length at t = {t} differs from P_t . E_{j + 1}")
    return length


def volume_difference_check(
    spec: SurfaceSpec, L: PicardClass, t: RationalLike
) -> Tuple[Fraction, Fraction, bool]:
    """Vol(L) - Vol(L - tG) against 2 * integral_0^t of the summed restricted volumes."""
    t = to_rational(t)
    ray = ray_breakpoints(spec, L)
    if t < 0 or not ray.mu.at_least(t):
        raise OutOfRangeError(f"t = {t} outside [0, mu = {ray.mu}]")
    lhs = volume_of(spec, L) - volume_of(spec, L - ray.G * t)
    if t == 0:
        return lhs, Fraction(0), lhs == 0
    rhs = 2 * sum((beta_profile(ray, j, t).integral() for j in range(spec.N)), Fraction(0))
    return lhs, rhs, lhs == rhs


def surface_volume_check(spec: SurfaceSpec, L: PicardClass) -> Tuple[Fraction, Fraction, bool]:
    """2 * sum of body areas against Vol(L)."""
    lhs = 2 * sum((b.area for b in surface_bodies(spec, L)), Fraction(0))
    rhs = volume_of(spec, L)
    return lhs, rhs, lhs == rhs


def curve_seshadri_infimum(spec: SurfaceSpec, L: PicardClass) -> Fraction:
    """
    Min of (L.C) / sum(m_i) over listed curves with positive total multiplicity,
    together with sqrt(L^2 / N) when that root is rational.
    """
    candidates = [intersect(L, C) / C.total_multiplicity for C in spec.curves if C.total_multiplicity > 0]
    ratio = self_intersection(L) / spec.N
    if ratio >= 0:
        num, den = math.isqrt(ratio.numerator), math.isqrt(ratio.denominator)
        if num * num == ratio.numerator and den * den == ratio.denominator:
            candidates.append(Fraction(num, den))
    if not candidates:
        raise PreconditionError("no curve bounds the Seshadri constant and sqrt(L^2/N) is irrational")
    return min(candidates)


# ---------------------------------------------------------------------------
# P^2 at N >= 9 very general points, with the Seshadri constant as input
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class P2Body:
    N: int
    epsilon: Fraction
    body: Polytope  # deglex coordinates
    body_blowup_coords: Polytope
    profile: PiecewiseLinear


def p2_profile(N: int, epsilon: RationalLike) -> PiecewiseLinear:
    eps = to_rational(epsilon)
    top = 1 / (N * eps)
    pieces = [LinearPiece(Fraction(0), eps, Fraction(0), Fraction(1))]
    if top > eps:
        pieces.append(LinearPiece(eps, top, eps * top / (top - eps), -eps / (top - eps)))
    return PiecewiseLinear(tuple(pieces))


def p2_body_formula(N: int, epsilon: RationalLike) -> P2Body:
    """Conv(0, eps e_1, 1/(N eps) e_2) and its restricted-volume profile."""
    eps = to_rational(epsilon)
    if N < 9:
        raise OutOfRangeError(f"the closed form is stated for N >= 9, got N={N}")
    if eps <= 0 or eps * eps * N > 1:
        raise OutOfRangeError(f"epsilon = {eps} outside (0, 1/sqrt({N})]")
    top = 1 / (N * eps)
    body = convex_hull([(0, 0), (eps, 0), (0, top)])
    return P2Body(N, eps, body, linear_image(body, F, (0, 0)), p2_profile(N, eps))
