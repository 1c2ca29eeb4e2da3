"""
Zariski decomposition on blow-ups of P^2 against a finite list of negative
curves, and its evolution along rays D_t = L - tG.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import sympy as sp

from okounkov.core.rational import RationalLike, solve, small_det, det, to_rational
from okounkov.errors import (
    InvariantError,
    IrrationalThresholdError,
    NotBigError,
    NotPseudoeffectiveError,
    SingularMatrixError,
)
from okounkov.logging_config import get_logger
from okounkov.services.picard import PicardClass, SurfaceSpec, intersect, self_intersection

logger = get_logger(__name__)


@dataclass(frozen=True)
class ZariskiDecomp:
    D: PicardClass
    P: PicardClass
    Nneg: PicardClass
    support: Tuple[int, ...]
    coefficients: Tuple[Fraction, ...]

    @property
    def volume(self) -> Fraction:
        return self_intersection(self.P)


def _negative_part(spec: SurfaceSpec, D: PicardClass, support: Sequence[int]) -> Tuple[Fraction, ...]:
    if not support:
        return ()
    gram = [[intersect(spec.curves[a], spec.curves[b]) for b in support] for a in support]
    rhs = [intersect(D, spec.curves[a]) for a in support]
    try:
        return solve(gram, rhs)
    except SingularMatrixError:
        raise SingularMatrixError(
            "Gram matrix of the support is singular; the curve list is not negative definite there",
            {"support": list(support)},
        ) from None


def _combine(spec: SurfaceSpec, support: Sequence[int], coeffs: Sequence[Fraction]) -> PicardClass:
    total = PicardClass.make(0, [0] * spec.N)
    for idx, c in zip(support, coeffs):
        total = total + spec.curves[idx] * c
    return total


def _grow(spec: SurfaceSpec, D: PicardClass, support: List[int]) -> Tuple[PicardClass, List[int], Tuple[Fraction, ...]]:
    curves = spec.curves
    seen = set()
    for _ in range(2 * len(curves) + 2):
        if tuple(support) in seen:
            # revisiting a support means no decomposition exists
            raise NotPseudoeffectiveError(f"{D} is not pseudoeffective against the curve list")
        seen.add(tuple(support))
        coeffs = _negative_part(spec, D, support)
        kept = [(i, c) for i, c in zip(support, coeffs) if c > 0]
        if len(kept) != len(support):
            support = [i for i, _ in kept]
            continue
        P = D - _combine(spec, support, coeffs)
        entering = [i for i, C in enumerate(curves) if i not in support and intersect(P, C) < 0]
        if not entering:
            return P, support, coeffs
        support = sorted(support + entering)
    raise InvariantError("Zariski iteration did not converge", {"D": str(D)})


def _is_decomposition(spec: SurfaceSpec, P: PicardClass, support: Sequence[int]) -> bool:
    """P nef against the list, orthogonal to a negative definite support."""
    if P.d < 0 or self_intersection(P) < 0:
        return False
    for idx, C in enumerate(spec.curves):
        value = intersect(P, C)
        if value < 0 or (idx in support and value != 0):
            return False
    gram = [[intersect(spec.curves[a], spec.curves[b]) for b in support] for a in support]
    return not gram or _is_negative_definite(gram)


def zariski(spec: SurfaceSpec, D: PicardClass, seed_support: Optional[Sequence[int]] = None) -> ZariskiDecomp:
    """
    Grow the support from the curves D meets negatively: solve the Gram system
    for the negative part, then add every curve the positive part still meets
    negatively. Curves whose coefficient comes out nonpositive are dropped.

    A seeded start is kept only when it ends in a nef P orthogonal to a
    negative definite support, which pins down the decomposition; any other
    seed falls back to the default start.
    """
    if D.d < 0:
        raise NotPseudoeffectiveError(f"{D} meets the nef class H negatively")
    if seed_support is not None:
        try:
            P, support, coeffs = _grow(spec, D, sorted(set(seed_support)))
            if _is_decomposition(spec, P, support):
                logger.debug("zariski_converged", D=str(D), support=support, seeded=True)
                return ZariskiDecomp(D, P, D - P, tuple(support), tuple(coeffs))
        except (SingularMatrixError, NotPseudoeffectiveError, InvariantError):
            pass
        logger.debug("zariski_seed_rejected", D=str(D), seed=sorted(set(seed_support)))

    start = [i for i, C in enumerate(spec.curves) if intersect(D, C) < 0]
    P, support, coeffs = _grow(spec, D, start)
    if self_intersection(P) < 0 or P.d < 0:
        raise NotPseudoeffectiveError(f"{D} is not pseudoeffective against the curve list")
    if not _is_decomposition(spec, P, support):
        raise InvariantError("support Gram matrix is not negative definite", {"D": str(D), "support": support})
    logger.debug("zariski_converged", D=str(D), support=support)
    return ZariskiDecomp(D, P, D - P, tuple(support), tuple(coeffs))


def _is_negative_definite(gram: Sequence[Sequence[Fraction]]) -> bool:
    # leading principal minors alternate in sign starting negative
    for k in range(1, len(gram) + 1):
        minor = [row[:k] for row in gram[:k]]
        value = small_det(minor) if k <= 3 else det(minor)
        if value == 0 or (value > 0) != (k % 2 == 0):
            return False
    return True


def check_zariski(spec: SurfaceSpec, dec: ZariskiDecomp) -> None:
    """Raise InvariantError if any postcondition of the decomposition fails."""
    if dec.P + dec.Nneg != dec.D:
        raise InvariantError("D != P + N")
    for idx, C in enumerate(spec.curves):
        value = intersect(dec.P, C)
        if idx in dec.support and value != 0:
            raise InvariantError(f"P.C = {value} on support curve {idx}")
        if value < 0:
            raise InvariantError(f"P.C = {value} < 0 for curve {idx}")
    if any(c < 0 for c in dec.coefficients):
        raise InvariantError("negative part has a negative coefficient")
    if _combine(spec, dec.support, dec.coefficients) != dec.Nneg:
        raise InvariantError("negative part is not the combination of its support")
    gram = [[intersect(spec.curves[a], spec.curves[b]) for b in dec.support] for a in dec.support]
    if gram and not _is_negative_definite(gram):
        raise InvariantError("support Gram matrix is not negative definite")


# ---------------------------------------------------------------------------
# rays
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Threshold:
    """The end of bigness along a ray: a root of P_t^2 = a + b t + c t^2."""

    value: sp.Expr
    quadratic: Tuple[Fraction, Fraction, Fraction]

    @property
    def is_rational(self) -> bool:
        return bool(self.value.is_Rational)

    @property
    def rational(self) -> Fraction:
        if not self.is_rational:
            raise IrrationalThresholdError(f"threshold {self.value} is irrational", {"quadratic": self.quadratic})
        return Fraction(int(self.value.p), int(self.value.q))

    def exceeds(self, t: RationalLike) -> bool:
        q = to_rational(t)
        return bool(self.value > sp.Rational(q.numerator, q.denominator))

    def at_least(self, t: RationalLike) -> bool:
        q = to_rational(t)
        return bool(self.value >= sp.Rational(q.numerator, q.denominator))

    def lower_bound(self, denominator: int) -> Fraction:
        """Largest p / denominator not above the threshold."""
        return Fraction(int(sp.floor(self.value * denominator)), denominator)

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class RaySegment:
    """On [start, end): P_t = P0 + t*P1 and N_t = sum (c0 + t*c1) C over the support."""

    start: Fraction
    end: Optional[Fraction]  # None when the segment runs to the threshold
    support: Tuple[int, ...]
    P0: PicardClass
    P1: PicardClass
    c0: Tuple[Fraction, ...]
    c1: Tuple[Fraction, ...]

    def positive_part(self, t: RationalLike) -> PicardClass:
        return self.P0 + self.P1 * to_rational(t)


@dataclass(frozen=True)
class RayDecomposition:
    L: PicardClass
    G: PicardClass
    breakpoints: Tuple[Fraction, ...]
    segments: Tuple[RaySegment, ...]
    mu: Threshold

    def segment_at(self, t: RationalLike) -> RaySegment:
        t = to_rational(t)
        for seg in reversed(self.segments):
            if seg.start <= t:
                return seg
        return self.segments[0]

    def positive_part(self, t: RationalLike) -> PicardClass:
        return self.segment_at(t).positive_part(t)


def _linear_pieces(spec: SurfaceSpec, L: PicardClass, G: PicardClass, support: Sequence[int]):
    """P_t = P0 + t P1 with coefficients c0 + t c1 for a fixed support."""
    c0 = _negative_part(spec, L, support)
    c1 = _negative_part(spec, -G, support)
    P0 = L - _combine(spec, support, c0)
    P1 = -G - _combine(spec, support, c1)
    return P0, P1, c0, c1


def _right_support(spec: SurfaceSpec, L: PicardClass, G: PicardClass, t0: Fraction, support: List[int]) -> List[int]:
    """Support valid just after t0: add curves that P_t meets in 0 at t0 and negatively beyond."""
    while True:
        P0, P1, _, _ = _linear_pieces(spec, L, G, support)
        entering = []
        for i, C in enumerate(spec.curves):
            if i in support:
                continue
            a, b = intersect(P0, C), intersect(P1, C)
            value = a + b * t0
            if value < 0 or (value == 0 and b < 0):
                entering.append(i)
        if not entering:
            return support
        support = sorted(support + entering)


def _first_root(a: Fraction, b: Fraction, c: Fraction, lo: Fraction, hi: Optional[Fraction]) -> Optional[sp.Expr]:
    """Smallest root of a + b t + c t^2 in (lo, hi]."""
    t = sp.Symbol("t")
    poly = sp.Rational(a.numerator, a.denominator) + sp.Rational(b.numerator, b.denominator) * t \
        + sp.Rational(c.numerator, c.denominator) * t ** 2
    lo_s = sp.Rational(lo.numerator, lo.denominator)
    roots = [r for r in sp.solve(poly, t) if r.is_real and r > lo_s]
    if hi is not None:
        hi_s = sp.Rational(hi.numerator, hi.denominator)
        roots = [r for r in roots if r <= hi_s]
    return min(roots, key=lambda r: sp.N(r, 50)) if roots else None


def ray_breakpoints(spec: SurfaceSpec, L: PicardClass, G: Optional[PicardClass] = None) -> RayDecomposition:
    """
    Walk t upward from 0. On each interval the support is fixed, so the
    negative part is affine in t; the next breakpoint is the first t where a
    curve outside the support meets P_t negatively, and the walk stops where
    P_t^2 reaches 0.
    """
    G = G if G is not None else PicardClass.exceptional_sum(spec.N)
    start = zariski(spec, L)
    if start.volume <= 0:
        raise NotBigError(f"{L} is not big (vol = {start.volume})")

    t0 = Fraction(0)
    support = _right_support(spec, L, G, t0, list(start.support))
    breakpoints: List[Fraction] = []
    segments: List[RaySegment] = []
    for _ in range(len(spec.curves) + 1):
        P0, P1, c0, c1 = _linear_pieces(spec, L, G, support)
        events = []
        for i, C in enumerate(spec.curves):
            if i in support:
                continue
            a, b = intersect(P0, C), intersect(P1, C)
            if b < 0:
                events.append(-a / b)
        nxt = min((e for e in events if e > t0), default=None)
        quad = (self_intersection(P0), 2 * intersect(P0, P1), self_intersection(P1))
        root = _first_root(*quad, t0, nxt)
        if root is not None:
            segments.append(RaySegment(t0, None, tuple(support), P0, P1, c0, c1))
            mu = Threshold(root, quad)
            logger.info("ray_threshold", L=str(L), mu=str(root), breakpoints=[str(b) for b in breakpoints])
            return RayDecomposition(L, G, tuple(breakpoints), tuple(segments), mu)
        if nxt is None:
            raise InvariantError("ray never leaves the big cone", {"L": str(L)})
        segments.append(RaySegment(t0, nxt, tuple(support), P0, P1, c0, c1))
        breakpoints.append(nxt)
        logger.debug("ray_breakpoint", t=str(nxt), support=support)
        t0 = nxt
        support = _right_support(spec, L, G, t0, support)
    raise InvariantError("ray walk did not terminate", {"L": str(L)})


def zariski_chamber_count(spec: SurfaceSpec, L: PicardClass, G: Optional[PicardClass] = None) -> int:
    ray = ray_breakpoints(spec, L, G)
    return len({seg.support for seg in ray.segments})


def volume_of(spec: SurfaceSpec, D: PicardClass) -> Fraction:
    return zariski(spec, D).volume
