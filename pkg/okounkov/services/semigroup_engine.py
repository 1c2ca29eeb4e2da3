"""
Multipoint splits of graded valuation data and the finite-level bodies they span.

Sections are represented only by their valuation tuples. A record at level k
lands in V_{k,j} when its valuation at p_j is strictly smaller than at every
other point; W_{k,j} awards ties to the earlier point, so the W sets partition
the level.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from pydantic import ValidationError

from okounkov.core.geometry import Polytope, convex_hull, is_subset, volume
from okounkov.errors import InvariantError, OutOfRangeError, PreconditionError, SchemaError
from okounkov.logging_config import get_logger
from okounkov.schemas_pkg.semigroup import SemigroupInput
from okounkov.services.valuation_orders import MonomialOrder, ValuationVector

logger = get_logger(__name__)


@dataclass(frozen=True)
class SectionRecord:
    vals: Tuple[ValuationVector, ...]

    def __post_init__(self):
        if len({v.order for v in self.vals}) > 1:
            raise PreconditionError("section record mixes monomial orders")


@dataclass(frozen=True)
class GradedValuationData:
    n: int
    N: int
    order: MonomialOrder
    levels: Mapping[int, Tuple[SectionRecord, ...]]
    h0: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        for k, records in self.levels.items():
            if k < 1:
                raise PreconditionError(f"level {k} is not positive")
            for rec in records:
                if len(rec.vals) != self.N or any(v.dim != self.n or v.order != self.order for v in rec.vals):
                    raise PreconditionError(f"level {k} holds a record of the wrong shape")

    def records(self, k: int) -> Tuple[SectionRecord, ...]:
        try:
            return self.levels[k]
        except KeyError:
            raise OutOfRangeError(f"level {k} is not present", {"levels": sorted(self.levels)}) from None

    def _point(self, j: int) -> None:
        if not 0 <= j < self.N:
            raise OutOfRangeError(f"point index {j} outside 0..{self.N - 1}")


def ingest(payload: dict) -> GradedValuationData:
    """Build graded data from the JSON ingestion format."""
    try:
        parsed = SemigroupInput.model_validate(payload)
    except ValidationError as exc:
        raise SchemaError(f"semigroup input does not match its schema: {exc}") from exc
    levels = {
        k: tuple(SectionRecord(tuple(ValuationVector(tuple(val), parsed.order) for val in rec)) for rec in records)
        for k, records in sorted(parsed.levels.items())
    }
    return GradedValuationData(parsed.n, parsed.N, parsed.order, levels, dict(parsed.h0 or {}))


def _unique_sorted(values: Iterable[ValuationVector]) -> List[ValuationVector]:
    return sorted(set(values), key=lambda v: v.key)


def v_split(data: GradedValuationData, j: int, k: int) -> List[ValuationVector]:
    data._point(j)
    out = []
    for rec in data.records(k):
        mine = rec.vals[j]
        if all(mine < other for i, other in enumerate(rec.vals) if i != j):
            out.append(mine)
    return _unique_sorted(out)


def w_split(data: GradedValuationData, j: int, k: int) -> List[ValuationVector]:
    data._point(j)
    out = []
    for rec in data.records(k):
        mine = rec.vals[j]
        if all(mine < other if i < j else mine <= other for i, other in enumerate(rec.vals) if i != j):
            out.append(mine)
    return _unique_sorted(out)


def w_counts(data: GradedValuationData, k: int) -> List[int]:
    return [len(w_split(data, j, k)) for j in range(data.N)]


def check_dimension_partition(data: GradedValuationData, k: int, h0: Optional[int] = None) -> bool:
    """Sum over j of #W_{k,j} against the declared number of sections at level k."""
    declared = h0 if h0 is not None else data.h0.get(k)
    if declared is None:
        raise PreconditionError(f"no section count declared for level {k}")
    counts = w_counts(data, k)
    logger.debug("dimension_partition", level=k, counts=counts, declared=declared)
    return sum(counts) == declared


def check_additivity(data: GradedValuationData, j: int, k: int, l: int) -> bool:
    """Gamma_j^k + Gamma_j^l lands inside Gamma_j^{k+l}."""
    target = set(v_split(data, j, k + l))
    return all(a + b in target for a in v_split(data, j, k) for b in v_split(data, j, l))


@dataclass(frozen=True)
class SemigroupBodyApprox:
    j: int
    k_max: int
    levels: Mapping[int, Polytope]
    limit_hull: Polytope


def _scaled_hull(values: List[ValuationVector], k: int, n: int) -> Polytope:
    if not values:
        return Polytope.empty(n)
    return convex_hull(tuple(Fraction(x, k) for x in v.entries) for v in values)


def _factorial_chain(k_max: int) -> List[int]:
    chain, i = [], 1
    while math.factorial(i) <= k_max:
        chain.append(math.factorial(i))
        i += 1
    return chain


def body_approx(data: GradedValuationData, j: int, k_max: int) -> SemigroupBodyApprox:
    if k_max < 1:
        raise OutOfRangeError("k_max must be at least 1")
    data._point(j)
    levels: Dict[int, Polytope] = {}
    for k in range(1, k_max + 1):
        if k in data.levels:
            levels[k] = _scaled_hull(v_split(data, j, k), k, data.n)

    # hull of the union is the hull of the level hulls' vertices
    pooled = [v for hull in levels.values() for v in hull.vertices]
    limit = convex_hull(pooled) if pooled else Polytope.empty(data.n)

    chain = [k for k in _factorial_chain(k_max) if k in levels]
    for a, b in zip(chain, chain[1:]):
        if not is_subset(levels[a], levels[b]):
            raise InvariantError(
                f"level hulls not monotone along {a} | {b}",
                {"j": j, "levels": (a, b)},
            )
    logger.info("semigroup_body_built", j=j, k_max=k_max, levels=len(levels), limit_vertices=len(limit.vertices))
    return SemigroupBodyApprox(j=j, k_max=k_max, levels=levels, limit_hull=limit)


def essential_body(approx: SemigroupBodyApprox, k: int) -> Polytope:
    """Level hull with coordinate facets flagged for essential-interior membership."""
    try:
        hull = approx.levels[k]
    except KeyError:
        raise OutOfRangeError(f"no hull at level {k}") from None
    return hull.with_coordinate_facets()


def volume_limit_estimate(data: GradedValuationData, j: int, m_range: Iterable[int]) -> List[Tuple[int, Fraction]]:
    """Normalized counts #Gamma_j^m / m^n along the requested levels."""
    return [(m, Fraction(len(v_split(data, j, m)), m ** data.n)) for m in m_range]


def limit_volume(approx: SemigroupBodyApprox) -> Fraction:
    return volume(approx.limit_hull)
