"""
Multipoint Okounkov bodies of smooth polarized toric varieties.

The polytope is cut into cells P_j = {m in P : l_j(m) <= l_i(m) for all chosen i},
where l_j is the sum of the Delzant chart coordinates at vertex j. The body at
p_j is the chart image of its cell. The same charts drive the lattice oracle
that feeds the semigroup engine.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

from okounkov.core.geometry import (
    Halfspace,
    Polytope,
    convex_hull,
    halfspace_intersection,
    intersection,
    lattice_points,
    linear_image,
    volume,
)
from okounkov.core.rational import (
    RatMatrix,
    RatVec,
    RationalLike,
    as_vec,
    dot,
    inverse,
    is_integral,
    mat_vec,
    small_det,
    sub,
)
from okounkov.errors import EmptyPolytopeError, GeometryError, NonDelzantError, OutOfRangeError, PreconditionError
from okounkov.logging_config import get_logger
from okounkov.services.semigroup_engine import GradedValuationData, SectionRecord
from okounkov.services.valuation_orders import MonomialOrder, QuasiMonomialValuation, monomial_value

logger = get_logger(__name__)


@dataclass(frozen=True)
class Edge:
    direction: Tuple[int, ...]  # primitive
    length: int  # lattice length
    far_vertex: int


def _edges_at(base: Polytope) -> Tuple[Tuple[Edge, ...], ...]:
    n = base.dim
    tight = [frozenset(i for i, h in enumerate(base.halfspaces) if h.is_tight(v)) for v in base.vertices]
    edges: List[List[Edge]] = [[] for _ in base.vertices]
    for a, b in itertools.combinations(range(len(base.vertices)), 2):
        if len(tight[a] & tight[b]) < n - 1:
            continue
        diff = [int(x) for x in sub(base.vertices[b], base.vertices[a])]
        g = math.gcd(*diff)
        step = tuple(x // g for x in diff)
        edges[a].append(Edge(step, g, b))
        edges[b].append(Edge(tuple(-x for x in step), g, a))
    return tuple(tuple(sorted(e, key=lambda edge: edge.direction)) for e in edges)


@dataclass(frozen=True)
class DelzantPolytope:
    base: Polytope
    edges: Tuple[Tuple[Edge, ...], ...]

    @classmethod
    def from_points(cls, points: Sequence[Sequence[RationalLike]]) -> "DelzantPolytope":
        base = convex_hull(points)
        if base.dim not in (2, 3) or not base.is_full_dimensional:
            raise GeometryError("toric polytopes must be full-dimensional in dimension 2 or 3")
        if not all(is_integral(v) for v in base.vertices):
            raise NonDelzantError("lattice polytope needs integer vertices")
        return cls(base, _edges_at(base))

    @property
    def n(self) -> int:
        return self.base.dim

    @property
    def vertices(self) -> Tuple[RatVec, ...]:
        return self.base.vertices

    def index_of(self, point: Sequence[RationalLike]) -> int:
        try:
            return self.vertices.index(as_vec(point))
        except ValueError:
            raise PreconditionError(f"{tuple(point)} is not a vertex of the polytope") from None

    def is_delzant_at(self, v: int) -> bool:
        try:
            vertex_chart(self, v)
        except NonDelzantError:
            return False
        return True

    def dilated(self, k: int) -> "DelzantPolytope":
        if k < 1:
            raise OutOfRangeError("dilation factor must be a positive integer")
        return DelzantPolytope.from_points([tuple(k * x for x in v) for v in self.vertices])


@dataclass(frozen=True)
class VertexChart:
    vertex_index: int
    vertex: RatVec
    edges: Tuple[Edge, ...]  # in chart order
    inverse_basis: RatMatrix

    def apply(self, m: Sequence[RationalLike]) -> RatVec:
        return mat_vec(self.inverse_basis, sub(as_vec(m), self.vertex))

    def level(self, m: Sequence[RationalLike]) -> Fraction:
        return sum(self.apply(m), Fraction(0))

    @property
    def functional(self) -> RatVec:
        """Row vector s with l(m) = s·m - s·vertex."""
        return tuple(sum(col) for col in zip(*self.inverse_basis))

    def affine(self) -> Tuple[RatMatrix, RatVec]:
        return self.inverse_basis, tuple(-x for x in mat_vec(self.inverse_basis, self.vertex))


def vertex_chart(P: DelzantPolytope, v: int) -> VertexChart:
    if not 0 <= v < len(P.vertices):
        raise OutOfRangeError(f"vertex index {v} outside 0..{len(P.vertices) - 1}")
    n, edges = P.n, P.edges[v]
    if len(edges) != n:
        raise NonDelzantError(f"vertex {v} meets {len(edges)} edges, expected {n}", {"vertex": v})
    # first permutation in which u_i has a nonzero i-th coordinate
    ordered = next(
        (perm for perm in itertools.permutations(edges) if all(e.direction[i] != 0 for i, e in enumerate(perm))),
        None,
    )
    columns = [[Fraction(e.direction[r]) for e in ordered] for r in range(n)] if ordered else None
    if columns is None or abs(small_det(columns)) != 1:
        raise NonDelzantError(f"edge directions at vertex {v} are not a lattice basis", {"vertex": v})
    return VertexChart(v, P.vertices[v], tuple(ordered), inverse(columns))


def vanishing_order(P: DelzantPolytope, v: int, m: Sequence[RationalLike]) -> Fraction:
    return vertex_chart(P, v).level(m)


def jet_separation(P: DelzantPolytope, v: int) -> int:
    """Largest k with k-jets generated at the fixed point of vertex v."""
    return min(e.length for e in vertex_chart(P, v).edges)


@dataclass(frozen=True)
class ToricInput:
    polytope: DelzantPolytope
    chosen: Tuple[int, ...]

    def __post_init__(self):
        if not self.chosen:
            raise PreconditionError("at least one vertex must be chosen")
        if len(set(self.chosen)) != len(self.chosen):
            raise PreconditionError("chosen vertices must be distinct")
        if any(not 0 <= c < len(self.polytope.vertices) for c in self.chosen):
            raise OutOfRangeError("chosen vertex index out of range")

    @classmethod
    def from_points(cls, points: Sequence[Sequence[RationalLike]], chosen: Optional[Sequence[int]] = None) -> "ToricInput":
        """``chosen`` indexes into ``points`` as given; None picks every vertex."""
        P = DelzantPolytope.from_points(points)
        if chosen is None:
            return cls(P, tuple(range(len(P.vertices))))
        if any(not 0 <= i < len(points) for i in chosen):
            raise OutOfRangeError("chosen index outside the listed points")
        return cls(P, tuple(P.index_of(points[i]) for i in chosen))

    @property
    def n(self) -> int:
        return self.polytope.n

    @cached_property
    def charts(self) -> Tuple[VertexChart, ...]:
        return tuple(vertex_chart(self.polytope, v) for v in self.chosen)

    def dilated(self, k: int) -> "ToricInput":
        # positive scaling keeps the lexicographic vertex order
        return ToricInput(self.polytope.dilated(k), self.chosen)


def toric_subdivision(inp: ToricInput) -> List[Polytope]:
    base = inp.polytope.base
    cells = []
    for j, cj in enumerate(inp.charts):
        hs = list(base.halfspaces)
        feasible = True
        for i, ci in enumerate(inp.charts):
            if i == j:
                continue
            normal = sub(cj.functional, ci.functional)
            offset = dot(cj.functional, cj.vertex) - dot(ci.functional, ci.vertex)
            if all(x == 0 for x in normal):
                feasible = feasible and offset >= 0
                continue
            hs.append(Halfspace.make(normal, offset))
        cell = Polytope.empty(inp.n)
        if feasible:
            try:
                cell = halfspace_intersection(hs)
            except EmptyPolytopeError:
                pass
        cells.append(cell)
    logger.info(
        "toric_subdivision_built",
        cells=len(cells),
        volumes=[str(volume(c)) for c in cells],
    )
    return cells


def toric_body(inp: ToricInput, j: int, cells: Optional[List[Polytope]] = None) -> Polytope:
    """Chart image of cell j; ``j`` indexes the chosen points."""
    if not 0 <= j < len(inp.chosen):
        raise OutOfRangeError(f"point index {j} outside 0..{len(inp.chosen) - 1}")
    cells = cells if cells is not None else toric_subdivision(inp)
    cell = cells[j]
    if cell.is_empty:
        return cell
    A, b = inp.charts[j].affine()
    return linear_image(cell, A, b)


def toric_bodies(inp: ToricInput) -> List[Polytope]:
    cells = toric_subdivision(inp)
    return [toric_body(inp, j, cells) for j in range(len(inp.chosen))]


def toric_seshadri(inp: ToricInput) -> Fraction:
    """Min over chosen vertices and their edges; edges between two chosen vertices count half."""
    chosen = set(inp.chosen)
    return min(
        Fraction(e.length, 2) if e.far_vertex in chosen else Fraction(e.length)
        for chart in inp.charts
        for e in chart.edges
    )


def toric_volume_check(inp: ToricInput) -> Tuple[Fraction, Fraction, bool]:
    scale = math.factorial(inp.n)
    lhs = scale * sum((volume(b) for b in toric_bodies(inp)), Fraction(0))
    rhs = scale * volume(inp.polytope.base)
    return lhs, rhs, lhs == rhs


def barycentric_meeting_point(inp: ToricInput) -> Optional[RatVec]:
    """Common point of all cells when every vertex is chosen and the cells meet in one point."""
    if len(inp.chosen) != len(inp.polytope.vertices):
        return None
    common = intersection(toric_subdivision(inp))
    if common.is_empty or common.affine_dim != 0:
        return None
    return common.vertices[0]


def _valuations(inp: ToricInput) -> List[QuasiMonomialValuation]:
    return [
        QuasiMonomialValuation.identity(inp.n, MonomialOrder.DEGLEX, center_label=f"p{j}")
        for j in range(len(inp.chosen))
    ]


def toric_level_records(inp: ToricInput, k: int) -> List[SectionRecord]:
    """One record per lattice point of kP: its chart exponents at every chosen vertex."""
    if k < 0:
        raise OutOfRangeError("level must be nonnegative")
    valuations = _valuations(inp)
    if k == 0:
        zero = (0,) * inp.n
        return [SectionRecord(tuple(monomial_value(val, zero) for val in valuations))]
    frames = []
    for chart in inp.charts:
        rows = tuple(tuple(int(x) for x in row) for row in chart.inverse_basis)
        origin = tuple(int(k * x) for x in chart.vertex)
        frames.append((rows, origin))
    records = []
    for m in lattice_points(inp.polytope.base, k):
        vals = []
        for (rows, origin), val in zip(frames, valuations):
            shifted = [a - b for a, b in zip(m, origin)]
            alpha = tuple(sum(r * s for r, s in zip(row, shifted)) for row in rows)
            vals.append(monomial_value(val, alpha))
        records.append(SectionRecord(tuple(vals)))
    return records


def toric_oracle_export(inp: ToricInput, k_max: int) -> GradedValuationData:
    if k_max < 1:
        raise OutOfRangeError("k_max must be at least 1")
    levels, h0 = {}, {}
    for k in range(1, k_max + 1):
        records = toric_level_records(inp, k)
        levels[k] = tuple(records)
        h0[k] = len(records)
    logger.info("toric_oracle_exported", k_max=k_max, sections=sum(h0.values()))
    return GradedValuationData(inp.n, len(inp.chosen), MonomialOrder.DEGLEX, levels, h0)


def export_payload(data: GradedValuationData) -> dict:
    """The semigroup ingestion format for graded data."""
    return {
        "n": data.n,
        "N": data.N,
        "order": data.order.value,
        "levels": {
            str(k): [[list(v.entries) for v in rec.vals] for rec in records]
            for k, records in sorted(data.levels.items())
        },
        "h0": {str(k): c for k, c in sorted(data.h0.items())},
    }
