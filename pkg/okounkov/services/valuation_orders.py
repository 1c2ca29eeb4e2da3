"""
Monomial orders on Z^n and quasi-monomial valuations.

A valuation is given by integer vectors lambda_1..lambda_n: the monomial
x^alpha is sent to sum(alpha_i * lambda_i), and a finite sum of monomials
without cancellation to the order-minimum over its support.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import Iterable, Sequence, Tuple

from okounkov.core.rational import small_det
from okounkov.errors import (
    DimensionMismatchError,
    OrderMismatchError,
    OutOfRangeError,
    PreconditionError,
    SingularMatrixError,
)


class MonomialOrder(str, Enum):
    LEX = "lex"
    DEGLEX = "deglex"


class Comparison(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def sort_key(order: MonomialOrder, a: Sequence[int]) -> Tuple[int, ...]:
    """Tuple whose natural ordering realizes ``order``."""
    if order == MonomialOrder.DEGLEX:
        return (sum(a),) + tuple(a)
    return tuple(a)


def compare(order: MonomialOrder, a: Sequence[int], b: Sequence[int]) -> Comparison:
    if len(a) != len(b):
        raise DimensionMismatchError(f"cannot compare vectors of length {len(a)} and {len(b)}")
    ka, kb = sort_key(order, a), sort_key(order, b)
    if ka < kb:
        return Comparison.LESS
    if ka > kb:
        return Comparison.GREATER
    return Comparison.EQUAL


@dataclass(frozen=True)
class ValuationVector:
    entries: Tuple[int, ...]
    order: MonomialOrder

    def _check(self, other: "ValuationVector") -> None:
        if not isinstance(other, ValuationVector):
            raise TypeError(f"cannot compare ValuationVector with {type(other).__name__}")
        if other.order != self.order:
            raise OrderMismatchError(
                f"valuation vectors under {self.order.value} and {other.order.value} compared",
            )

    @property
    def key(self) -> Tuple[int, ...]:
        return sort_key(self.order, self.entries)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __lt__(self, other: "ValuationVector") -> bool:
        self._check(other)
        return compare(self.order, self.entries, other.entries) == Comparison.LESS

    def __le__(self, other: "ValuationVector") -> bool:
        self._check(other)
        return compare(self.order, self.entries, other.entries) != Comparison.GREATER

    def __gt__(self, other: "ValuationVector") -> bool:
        return other < self

    def __ge__(self, other: "ValuationVector") -> bool:
        return other <= self

    def __add__(self, other: "ValuationVector") -> "ValuationVector":
        self._check(other)
        return ValuationVector(tuple(x + y for x, y in zip(self.entries, other.entries)), self.order)


@dataclass(frozen=True)
class QuasiMonomialValuation:
    lam: Tuple[Tuple[int, ...], ...]
    order: MonomialOrder = MonomialOrder.DEGLEX
    center_label: str = "p"

    def __post_init__(self):
        n = len(self.lam)
        if n == 0 or any(len(row) != n for row in self.lam):
            raise DimensionMismatchError("lambda must be a nonempty square integer matrix")
        if any(not isinstance(x, int) or isinstance(x, bool) for row in self.lam for x in row):
            raise PreconditionError("lambda entries must be integers")
        if small_det(self.lam) == 0:
            raise SingularMatrixError("lambda rows are linearly dependent")

    @property
    def n(self) -> int:
        return len(self.lam)

    @classmethod
    def identity(cls, n: int, order: MonomialOrder = MonomialOrder.DEGLEX, center_label: str = "p"):
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), order, center_label)


def monomial_value(v: QuasiMonomialValuation, alpha: Sequence[int]) -> ValuationVector:
    if len(alpha) != v.n:
        raise DimensionMismatchError(f"exponent of length {len(alpha)} for a valuation on {v.n} variables")
    if any(a < 0 for a in alpha):
        raise OutOfRangeError(f"exponent {tuple(alpha)} has negative entries")
    entries = tuple(sum(a * row[c] for a, row in zip(alpha, v.lam)) for c in range(v.n))
    return ValuationVector(entries, v.order)


def support_value(v: QuasiMonomialValuation, support: Iterable[Sequence[int]]) -> ValuationVector:
    """Valuation of a polynomial with the given monomial support (no cancellation)."""
    values = [monomial_value(v, alpha) for alpha in support]
    if not values:
        raise PreconditionError("the zero polynomial has no valuation")
    return min(values, key=lambda w: w.key)


def deglex_to_lex(alpha: Sequence[int]) -> Tuple[int, ...]:
    """F(alpha) = (|alpha|, alpha_1, ..., alpha_{n-1})."""
    alpha = tuple(alpha)
    return (sum(alpha),) + alpha[:-1]


def deglex_encoding(n: int, center_label: str = "p") -> QuasiMonomialValuation:
    """Lex-order valuation whose monomial values are F(alpha)."""
    if n < 1:
        raise OutOfRangeError("dimension must be positive")
    rows = []
    for i in range(n):
        row = [0] * n
        row[0] += 1
        if i + 1 < n:
            row[i + 1] += 1
        rows.append(tuple(row))
    return QuasiMonomialValuation(tuple(rows), MonomialOrder.LEX, center_label)


def is_faithful(v: QuasiMonomialValuation) -> bool:
    return abs(small_det(v.lam)) == 1
