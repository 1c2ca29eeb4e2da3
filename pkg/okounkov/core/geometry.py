"""
Exact polyhedral kernel for ambient dimensions 1 to 3.

A Polytope always carries both representations: the extreme points and a
canonical, redundancy-free list of halfspaces ``normal·x <= offset``.
Lower-dimensional bodies are ordinary values (their affine hull is encoded by
pairs of opposite halfspaces) and have volume 0; the empty polytope has no
vertices and no halfspaces.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from functools import cmp_to_key
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from okounkov.core.rational import (
    ONE,
    ZERO,
    RatVec,
    RationalLike,
    add,
    as_vec,
    cross,
    dot,
    format_vec,
    mat_vec,
    nullspace,
    scale,
    small_det,
    small_solve,
    sub,
    to_rational,
)
from okounkov.errors import (
    DimensionMismatchError,
    EmptyPolytopeError,
    GeometryError,
    InvariantError,
    SingularMatrixError,
    UnboundedPolytopeError,
)

MAX_DIM = 3


class ContainmentMode(str, Enum):
    CLOSURE = "closure"
    ESSENTIAL_INTERIOR = "essential_interior"


@dataclass(frozen=True, order=True)
class Halfspace:
    """The set {x : normal·x <= offset}."""

    normal: RatVec
    offset: Fraction

    def __post_init__(self):
        if all(c == 0 for c in self.normal):
            raise GeometryError("halfspace normal is the zero vector")

    @classmethod
    def make(cls, normal: Sequence[RationalLike], offset: RationalLike) -> "Halfspace":
        """Build with the normal scaled to a primitive integer vector."""
        normal = as_vec(normal)
        offset = to_rational(offset)
        if all(c == 0 for c in normal):
            raise GeometryError("halfspace normal is the zero vector")
        den = math.lcm(*(c.denominator for c in normal))
        num = math.gcd(*(int(c * den) for c in normal))
        factor = Fraction(den, num)
        return cls(tuple(c * factor for c in normal), offset * factor)

    @property
    def dim(self) -> int:
        return len(self.normal)

    def evaluate(self, x: Sequence[Fraction]) -> Fraction:
        return dot(self.normal, x)

    def contains(self, x: Sequence[Fraction], strict: bool = False) -> bool:
        value = self.evaluate(x)
        return value < self.offset if strict else value <= self.offset

    def is_tight(self, x: Sequence[Fraction]) -> bool:
        return self.evaluate(x) == self.offset

    def is_coordinate(self) -> bool:
        """True when the bounding hyperplane is a coordinate hyperplane {x_i = 0}."""
        return self.offset == 0 and sum(1 for c in self.normal if c != 0) == 1

    def negated(self) -> "Halfspace":
        return Halfspace(tuple(-c for c in self.normal), -self.offset)


@dataclass(frozen=True)
class Polytope:
    dim: int
    vertices: Tuple[RatVec, ...]
    halfspaces: Tuple[Halfspace, ...]
    affine_dim: int
    coordinate_facets: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self):
        if not 1 <= self.dim <= MAX_DIM:
            raise GeometryError(f"ambient dimension {self.dim} outside 1..{MAX_DIM}")

    @classmethod
    def empty(cls, dim: int) -> "Polytope":
        return cls(dim=dim, vertices=(), halfspaces=(), affine_dim=-1)

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @property
    def is_full_dimensional(self) -> bool:
        return self.affine_dim == self.dim

    def __contains__(self, x) -> bool:
        return contains(self, x)

    def with_coordinate_facets(self) -> "Polytope":
        marked = frozenset(i for i, h in enumerate(self.halfspaces) if h.is_coordinate())
        return replace(self, coordinate_facets=marked)

    def check_invariants(self) -> None:
        """Raise InvariantError if the two representations disagree."""
        for v in self.vertices:
            for h in self.halfspaces:
                if not h.contains(v):
                    raise InvariantError(
                        f"vertex {format_vec(v)} violates halfspace {h}",
                    )
        if self.vertices and halfspace_intersection(self.halfspaces).vertices != self.vertices:
            raise InvariantError("halfspace representation does not reproduce the vertices")

    def __repr__(self):
        verts = ", ".join(format_vec(v) for v in self.vertices)
        return f"<Polytope dim={self.dim} affine_dim={self.affine_dim} vertices=[{verts}]>"


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def _build(dim: int, vertices: Iterable[RatVec], halfspaces: Iterable[Halfspace], affine_dim: int) -> Polytope:
    poly = Polytope(
        dim=dim,
        vertices=tuple(sorted(set(vertices))),
        halfspaces=tuple(sorted(set(halfspaces))),
        affine_dim=affine_dim,
    )
    return poly.with_coordinate_facets()


def _independent_columns(vectors: Sequence[RatVec]) -> Optional[Tuple[int, ...]]:
    """Coordinates on which the given vectors are linearly independent, if any."""
    if not vectors:
        return ()
    k, n = len(vectors), len(vectors[0])
    if k > n:
        return None
    for cols in itertools.combinations(range(n), k):
        if small_det([[v[c] for c in cols] for v in vectors]) != 0:
            return cols
    return None


def _affine_basis(pts: Sequence[RatVec]) -> Tuple[List[int], List[RatVec]]:
    base = pts[0]
    chosen, dirs = [0], []
    for i, p in enumerate(pts[1:], start=1):
        d = sub(p, base)
        if _independent_columns(dirs + [d]) is not None:
            chosen.append(i)
            dirs.append(d)
            if len(dirs) == len(base):
                break
    return chosen, dirs


def _turn(o: RatVec, a: RatVec, b: RatVec) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull1(pts: Sequence[RatVec]):
    lo, hi = min(pts), max(pts)
    return [lo, hi], [Halfspace.make((1,), hi[0]), Halfspace.make((-1,), -lo[0])]


def _hull2(pts: Sequence[RatVec]):
    """Andrew's monotone chain on sorted, distinct, full-dimensional input."""
    lower: List[RatVec] = []
    for p in pts:
        while len(lower) >= 2 and _turn(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[RatVec] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _turn(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    ring = lower[:-1] + upper[:-1]
    halfspaces = []
    for i, p in enumerate(ring):
        q = ring[(i + 1) % len(ring)]
        normal = (q[1] - p[1], p[0] - q[0])
        halfspaces.append(Halfspace.make(normal, dot(normal, p)))
    return ring, halfspaces


def _line_extremes(pts: Sequence[RatVec]) -> List[RatVec]:
    """Keep only points extreme along some axis-parallel line; hull vertices always are."""
    keep = set()
    for axis in range(3):
        lines = {}
        for p in pts:
            key = p[:axis] + p[axis + 1:]
            lo, hi = lines.get(key, (p, p))
            lines[key] = (min(lo, p, key=lambda v: v[axis]), max(hi, p, key=lambda v: v[axis]))
        for lo, hi in lines.values():
            keep.add(lo)
            keep.add(hi)
    return sorted(keep)


def _extreme(candidates: Iterable[RatVec], planes: Iterable[Halfspace]) -> set:
    planes = list(planes)
    out = set()
    for v in candidates:
        normals = [h.normal for h in planes if h.is_tight(v)]
        if any(small_det(list(tri)) != 0 for tri in itertools.combinations(normals, 3)):
            out.add(v)
    return out


def _hull3(pts: Sequence[RatVec], seed: Sequence[int]):
    """Beneath-beyond insertion keeping merged facets (planes), not triangles."""
    simplex = [pts[i] for i in seed]
    inner = scale(Fraction(1, 4), add(add(simplex[0], simplex[1]), add(simplex[2], simplex[3])))

    def plane_through(a: RatVec, b: RatVec, c: RatVec) -> Optional[Halfspace]:
        normal = cross(sub(b, a), sub(c, a))
        if all(x == 0 for x in normal):
            return None
        h = Halfspace.make(normal, dot(normal, a))
        return h.negated() if h.evaluate(inner) > h.offset else h

    facets = {plane_through(*tri) for tri in itertools.combinations(simplex, 3)}
    verts = set(simplex)
    for p in _line_extremes(pts):
        if p in verts:
            continue
        visible = [h for h in facets if h.evaluate(p) > h.offset]
        if not visible:
            continue
        hidden = [h for h in facets if h.evaluate(p) <= h.offset]
        on = {h: {v for v in verts if h.is_tight(v)} for h in facets}
        updated = set(hidden)
        for f in visible:
            for g in hidden:
                ridge = on[f] & on[g]
                if len(ridge) < 2:
                    continue
                h = plane_through(min(ridge), max(ridge), p)
                if h is not None:
                    updated.add(h)
        facets = updated
        verts = _extreme(verts | {p}, facets)
    return sorted(verts), sorted(facets)


def _full_hull(pts: Sequence[RatVec], n: int, seed: Sequence[int]):
    if n == 1:
        return _hull1(pts)
    if n == 2:
        return _hull2(pts)
    return _hull3(pts, seed)


def convex_hull(points: Iterable[Sequence[RationalLike]]) -> Polytope:
    """Minimal V-representation plus synthesized H-representation of the hull."""
    pts = [as_vec(p) for p in points]
    if not pts:
        raise GeometryError("convex hull of an empty point set")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise DimensionMismatchError("points of different dimensions in one hull")
    if not 1 <= n <= MAX_DIM:
        raise GeometryError(f"ambient dimension {n} outside 1..{MAX_DIM}")
    pts = sorted(set(pts))

    seed, dirs = _affine_basis(pts)
    d = len(dirs)
    if d == n:
        vertices, halfspaces = _full_hull(pts, n, seed)
        return _build(n, vertices, halfspaces, n)

    base = pts[0]
    equalities = []
    for w in nullspace(dirs, n):
        c = dot(w, base)
        equalities += [Halfspace.make(w, c), Halfspace.make(tuple(-x for x in w), -c)]
    if d == 0:
        return _build(n, [base], equalities, 0)

    # project onto coordinates where the affine hull projects injectively
    cols = _independent_columns(dirs)
    lift = {tuple(p[c] for c in cols): p for p in pts}
    proj = sorted(lift)
    sub_seed, _ = _affine_basis(proj)
    sub_vertices, sub_halfspaces = _full_hull(proj, d, sub_seed)
    halfspaces = list(equalities)
    for h in sub_halfspaces:
        normal = [ZERO] * n
        for c, value in zip(cols, h.normal):
            normal[c] = value
        halfspaces.append(Halfspace.make(normal, h.offset))
    return _build(n, [lift[v] for v in sub_vertices], halfspaces, d)


def _enumerate_vertices(hs: Sequence[Halfspace], n: int) -> List[RatVec]:
    found = set()
    for combo in itertools.combinations(hs, n):
        point = small_solve([h.normal for h in combo], [h.offset for h in combo])
        if point is not None and all(h.contains(point) for h in hs):
            found.add(point)
    return sorted(found)


def _recession_candidates(normals: Sequence[RatVec], n: int) -> Iterable[RatVec]:
    if n == 1:
        yield (ONE,)
        yield (-ONE,)
    elif n == 2:
        for a in normals:
            yield (-a[1], a[0])
            yield (a[1], -a[0])
    else:
        for a, b in itertools.combinations(normals, 2):
            d = cross(a, b)
            if any(x != 0 for x in d):
                yield d
                yield tuple(-x for x in d)


def _is_bounded(normals: Sequence[RatVec], n: int) -> bool:
    # a pointed cone {d : A d <= 0} other than {0} has an extreme ray cut out by n-1 rows
    for d in _recession_candidates(normals, n):
        if all(dot(a, d) <= 0 for a in normals):
            return False
    return True


def halfspace_intersection(hs: Iterable[Halfspace]) -> Polytope:
    """Bounded, nonempty intersection of halfspaces, with redundant ones dropped."""
    hs = sorted(set(hs))
    if not hs:
        raise UnboundedPolytopeError("intersection of no halfspaces is all of space")
    n = hs[0].dim
    if any(h.dim != n for h in hs):
        raise DimensionMismatchError("halfspaces of different dimensions")
    if not 1 <= n <= MAX_DIM:
        raise GeometryError(f"ambient dimension {n} outside 1..{MAX_DIM}")

    normals = [h.normal for h in hs]
    candidates = _enumerate_vertices(hs, n)
    if not candidates:
        lineality = nullspace(normals, n)
        if not lineality:
            raise EmptyPolytopeError("halfspace intersection is empty")
        pinned = list(hs)
        for d in lineality:
            pinned += [Halfspace.make(d, 0), Halfspace.make(tuple(-x for x in d), 0)]
        if _enumerate_vertices(pinned, n):
            raise UnboundedPolytopeError("halfspace intersection contains a line")
        raise EmptyPolytopeError("halfspace intersection is empty")
    if not _is_bounded(normals, n):
        raise UnboundedPolytopeError("halfspace intersection is unbounded")
    return convex_hull(candidates)


# ---------------------------------------------------------------------------
# measurements
# ---------------------------------------------------------------------------

def _around(pivot: Sequence[Fraction], pts: Sequence[RatVec], coords: Tuple[int, int]) -> List[RatVec]:
    """Sort points counter-clockwise around an extreme pivot in the given coordinate plane."""
    i, j = coords

    def cmp(a, b):
        turn = (a[i] - pivot[i]) * (b[j] - pivot[j]) - (a[j] - pivot[j]) * (b[i] - pivot[i])
        return -1 if turn > 0 else (1 if turn < 0 else 0)

    return sorted(pts, key=cmp_to_key(cmp))


def boundary_ring(P: Polytope) -> List[RatVec]:
    """Vertices of a polygon in counter-clockwise order, starting from the least one."""
    if P.dim != 2:
        raise GeometryError(f"boundary rings are planar, got dimension {P.dim}")
    if P.is_empty or not P.is_full_dimensional:
        return list(P.vertices)
    anchor = P.vertices[0]
    return [anchor] + _around(anchor, P.vertices[1:], (0, 1))


def volume(P: Polytope) -> Fraction:
    """Exact Lebesgue volume via a fan from the lexicographically least vertex."""
    if P.is_empty or not P.is_full_dimensional:
        return ZERO
    anchor = P.vertices[0]
    if P.dim == 1:
        return P.vertices[-1][0] - anchor[0]
    if P.dim == 2:
        ring = _around(anchor, P.vertices[1:], (0, 1))
        total = ZERO
        for a, b in zip(ring, ring[1:]):
            total += _turn(anchor, a, b)
        return abs(total) / 2

    total = ZERO
    for h in P.halfspaces:
        if h.is_tight(anchor):
            continue
        face = [v for v in P.vertices if h.is_tight(v)]
        drop = max(range(3), key=lambda c: abs(h.normal[c]))
        coords = tuple(c for c in range(3) if c != drop)
        pivot = min(face, key=lambda v: (v[coords[0]], v[coords[1]]))
        ring = [pivot] + _around(pivot, [v for v in face if v != pivot], coords)
        for a, b in zip(ring[1:], ring[2:]):
            total += abs(small_det([sub(pivot, anchor), sub(a, anchor), sub(b, anchor)]))
    return total / 6


def centroid(P: Polytope) -> RatVec:
    """Exact barycenter of a full-dimensional polytope."""
    if P.is_empty or not P.is_full_dimensional:
        raise GeometryError("centroid needs a full-dimensional polytope")
    if P.dim == 1:
        return scale(Fraction(1, 2), add(P.vertices[0], P.vertices[-1]))
    anchor = P.vertices[0]
    acc, weight = (ZERO,) * P.dim, ZERO
    if P.dim == 2:
        ring = _around(anchor, P.vertices[1:], (0, 1))
        for a, b in zip(ring, ring[1:]):
            w = abs(_turn(anchor, a, b))
            acc = add(acc, scale(w / 3, add(anchor, add(a, b))))
            weight += w
        return scale(1 / weight, acc)
    for h in P.halfspaces:
        if h.is_tight(anchor):
            continue
        face = [v for v in P.vertices if h.is_tight(v)]
        drop = max(range(3), key=lambda c: abs(h.normal[c]))
        coords = tuple(c for c in range(3) if c != drop)
        pivot = min(face, key=lambda v: (v[coords[0]], v[coords[1]]))
        ring = [pivot] + _around(pivot, [v for v in face if v != pivot], coords)
        for a, b in zip(ring[1:], ring[2:]):
            w = abs(small_det([sub(pivot, anchor), sub(a, anchor), sub(b, anchor)]))
            acc = add(acc, scale(w / 4, add(add(anchor, pivot), add(a, b))))
            weight += w
    return scale(1 / weight, acc)


# ---------------------------------------------------------------------------
# transformations
# ---------------------------------------------------------------------------

def linear_image(P: Polytope, A: Sequence[Sequence[RationalLike]], b: Sequence[RationalLike]) -> Polytope:
    """The image {Ax + b : x in P} under an invertible affine map."""
    rows = [as_vec(r) for r in A]
    shift = as_vec(b)
    if len(rows) != P.dim or any(len(r) != P.dim for r in rows) or len(shift) != P.dim:
        raise DimensionMismatchError(f"affine map does not act on dimension {P.dim}")
    if small_det(rows) == 0:
        raise SingularMatrixError("linear part of the affine map is singular")
    if P.is_empty:
        return P
    return convex_hull(add(mat_vec(rows, v), shift) for v in P.vertices)


def dilate(P: Polytope, k: RationalLike) -> Polytope:
    k = to_rational(k)
    if k <= 0:
        raise GeometryError("dilation factor must be positive")
    if P.is_empty:
        return P
    return convex_hull(scale(k, v) for v in P.vertices)


def minkowski_sum(P: Polytope, Q: Polytope) -> Polytope:
    if P.dim != Q.dim:
        raise DimensionMismatchError("Minkowski sum of polytopes in different dimensions")
    if P.is_empty or Q.is_empty:
        return Polytope.empty(P.dim)
    return convex_hull(add(p, q) for p in P.vertices for q in Q.vertices)


def intersection(polys: Sequence[Polytope]) -> Polytope:
    """Common part of several polytopes; empty when they do not meet."""
    if not polys:
        raise GeometryError("intersection of no polytopes")
    dim = polys[0].dim
    if any(p.is_empty for p in polys):
        return Polytope.empty(dim)
    try:
        return halfspace_intersection(h for p in polys for h in p.halfspaces)
    except EmptyPolytopeError:
        return Polytope.empty(dim)


def slice_at(P: Polytope, axis: int, t: RationalLike) -> Polytope:
    """{x in P : x_axis = t}, expressed in the remaining coordinates."""
    if P.dim < 2:
        raise GeometryError("slicing needs ambient dimension at least 2")
    if not 0 <= axis < P.dim:
        raise GeometryError(f"axis {axis} outside 0..{P.dim - 1}")
    t = to_rational(t)
    if P.is_empty:
        return Polytope.empty(P.dim - 1)
    unit = tuple(ONE if i == axis else ZERO for i in range(P.dim))
    cut = list(P.halfspaces) + [Halfspace.make(unit, t), Halfspace.make(tuple(-x for x in unit), -t)]
    try:
        section = halfspace_intersection(cut)
    except EmptyPolytopeError:
        return Polytope.empty(P.dim - 1)
    return convex_hull(v[:axis] + v[axis + 1:] for v in section.vertices)


# ---------------------------------------------------------------------------
# membership
# ---------------------------------------------------------------------------

def contains(P: Polytope, x: Sequence[RationalLike], mode: ContainmentMode = ContainmentMode.CLOSURE) -> bool:
    """
    Closure mode tests every halfspace with <=. Essential-interior mode is
    strict except on coordinate facets, where <= still applies.
    """
    if P.is_empty:
        return False
    x = as_vec(x)
    if len(x) != P.dim:
        raise DimensionMismatchError(f"point of dimension {len(x)} tested against a {P.dim}-polytope")
    for idx, h in enumerate(P.halfspaces):
        strict = mode == ContainmentMode.ESSENTIAL_INTERIOR and idx not in P.coordinate_facets
        if not h.contains(x, strict=strict):
            return False
    return True


def is_subset(P: Polytope, Q: Polytope) -> bool:
    """Closure containment P ⊆ Q, decided on the vertices of P."""
    return all(contains(Q, v) for v in P.vertices)


def lattice_points(P: Polytope, k: int = 1) -> List[Tuple[int, ...]]:
    """Integer points of the dilate kP, by bounding-box scan and halfspace membership."""
    if k < 1:
        raise GeometryError("lattice dilation must be a positive integer")
    if P.is_empty:
        return []
    lo = [math.floor(min(v[i] for v in P.vertices) * k) for i in range(P.dim)]
    hi = [math.ceil(max(v[i] for v in P.vertices) * k) for i in range(P.dim)]
    # canonical normals are primitive integer vectors
    bounds = [(tuple(int(c) for c in h.normal), h.offset * k) for h in P.halfspaces]
    found = []
    for x in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if all(sum(c * xi for c, xi in zip(normal, x)) <= offset for normal, offset in bounds):
            found.append(x)
    return found
