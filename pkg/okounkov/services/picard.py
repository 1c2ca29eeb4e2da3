"""
Picard lattice of the blow-up of P^2 at N points.

Classes are written D = d*H - sum(m_i * E_i), so E_i itself has d = 0 and
m_i = -1. The intersection form is H^2 = 1, E_i^2 = -1, H.E_i = 0.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from sympy.utilities.iterables import multiset_permutations

from okounkov.core.rational import RationalLike, format_rational, to_rational
from okounkov.errors import DimensionMismatchError, OutOfRangeError, PreconditionError
from okounkov.logging_config import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, order=True)
class PicardClass:
    d: Fraction
    m: Tuple[Fraction, ...]

    @classmethod
    def make(cls, d: RationalLike, m: Iterable[RationalLike]) -> "PicardClass":
        return cls(to_rational(d), tuple(to_rational(x) for x in m))

    @classmethod
    def from_list(cls, coords: Sequence[RationalLike]) -> "PicardClass":
        """[d, m_1, ..., m_N]"""
        if not coords:
            raise DimensionMismatchError("a class needs at least the H coefficient")
        return cls.make(coords[0], coords[1:])

    @classmethod
    def hyperplane(cls, N: int) -> "PicardClass":
        return cls.make(1, [0] * N)

    @classmethod
    def exceptional(cls, i: int, N: int) -> "PicardClass":
        if not 0 <= i < N:
            raise OutOfRangeError(f"exceptional index {i} outside 0..{N - 1}")
        return cls.make(0, [-1 if k == i else 0 for k in range(N)])

    @classmethod
    def exceptional_sum(cls, N: int) -> "PicardClass":
        return cls.make(0, [-1] * N)

    @classmethod
    def canonical(cls, N: int) -> "PicardClass":
        """K = -3H + sum E_i."""
        return cls.make(-3, [-1] * N)

    @property
    def N(self) -> int:
        return len(self.m)

    @property
    def total_multiplicity(self) -> Fraction:
        return sum(self.m, Fraction(0))

    def _same_shape(self, other: "PicardClass") -> None:
        if other.N != self.N:
            raise DimensionMismatchError(f"classes on blow-ups at {self.N} and {other.N} points")

    def __add__(self, other: "PicardClass") -> "PicardClass":
        self._same_shape(other)
        return PicardClass(self.d + other.d, tuple(a + b for a, b in zip(self.m, other.m)))

    def __sub__(self, other: "PicardClass") -> "PicardClass":
        self._same_shape(other)
        return PicardClass(self.d - other.d, tuple(a - b for a, b in zip(self.m, other.m)))

    def __mul__(self, c: RationalLike) -> "PicardClass":
        c = to_rational(c)
        return PicardClass(c * self.d, tuple(c * x for x in self.m))

    __rmul__ = __mul__

    def __neg__(self) -> "PicardClass":
        return self * -1

    def is_zero(self) -> bool:
        return self.d == 0 and all(x == 0 for x in self.m)

    def as_list(self) -> List[Fraction]:
        return [self.d, *self.m]

    def __str__(self):
        parts = [f"{format_rational(self.d)}H"]
        parts += [f"{format_rational(-x)}E{i + 1}" for i, x in enumerate(self.m) if x != 0]
        return " + ".join(parts)


def intersect(a: PicardClass, b: PicardClass) -> Fraction:
    a._same_shape(b)
    return a.d * b.d - sum((x * y for x, y in zip(a.m, b.m)), Fraction(0))


def self_intersection(a: PicardClass) -> Fraction:
    return intersect(a, a)


class CurveProvenance(str, Enum):
    DELPEZZO_AUTO = "delpezzo_auto"
    USER_SUPPLIED = "user_supplied"


def delpezzo_curves(N: int) -> List[PicardClass]:
    """All (-1)-classes on the blow-up of P^2 at N <= 8 general points."""
    if not 1 <= N <= 8:
        raise OutOfRangeError(f"automatic curve lists exist for 1 <= N <= 8, got N={N}")
    K = PicardClass.canonical(N)
    found = set()
    # (3d - 1)^2 <= N (d^2 + 1) bounds the degree by 7
    for d in range(0, 8):
        for combo in itertools.combinations_with_replacement(range(-1, d + 1), N):
            if sum(combo) != 3 * d - 1 or sum(x * x for x in combo) != d * d + 1:
                continue
            for perm in multiset_permutations(list(combo)):
                C = PicardClass.make(d, perm)
                if self_intersection(C) == -1 and intersect(C, K) == -1:
                    found.add(C)
    curves = sorted(found, key=lambda C: (C.d, tuple(-x for x in C.m)))
    logger.debug("delpezzo_curves_enumerated", N=N, count=len(curves))
    return curves


@dataclass(frozen=True)
class SurfaceSpec:
    N: int
    curves: Tuple[PicardClass, ...]
    provenance: CurveProvenance

    def __post_init__(self):
        if self.N < 1:
            raise OutOfRangeError("a surface needs at least one blown-up point")
        K = PicardClass.canonical(self.N)
        for idx, C in enumerate(self.curves):
            if C.N != self.N:
                raise DimensionMismatchError(f"curve {idx} lives on a blow-up at {C.N} points")
            sq = self_intersection(C)
            if self.provenance == CurveProvenance.DELPEZZO_AUTO:
                if sq != -1 or intersect(C, K) != -1:
                    raise PreconditionError(f"curve {idx} ({C}) is not a (-1)-curve")
            elif sq >= 0:
                raise PreconditionError(f"curve {idx} ({C}) has C^2 = {sq} >= 0")

    @classmethod
    def delpezzo(cls, N: int) -> "SurfaceSpec":
        return cls(N, tuple(delpezzo_curves(N)), CurveProvenance.DELPEZZO_AUTO)

    @classmethod
    def user(cls, N: int, curves: Iterable[PicardClass]) -> "SurfaceSpec":
        return cls(N, tuple(curves), CurveProvenance.USER_SUPPLIED)

    def exceptional(self, j: int) -> PicardClass:
        return PicardClass.exceptional(j, self.N)
