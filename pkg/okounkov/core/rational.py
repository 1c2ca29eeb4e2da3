"""
Exact rational scalars, vectors and matrices.

Scalars are ``fractions.Fraction`` (always in lowest terms with a positive
denominator). Vectors are tuples of Fractions. Matrix algebra beyond 3x3
goes through sympy so that determinants, inverses and nullspaces stay
exact; the closed-form 2x2/3x3 helpers are only used in geometric inner loops.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

import sympy as sp

from okounkov.errors import DimensionMismatchError, SchemaError, SingularMatrixError

Rational = Fraction
RatVec = Tuple[Fraction, ...]
RatMatrix = Tuple[RatVec, ...]
RationalLike = Union[int, Fraction, str, Sequence[int], sp.Rational]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_rational(value: RationalLike) -> Fraction:
    """
    Parse anything the JSON surfaces allow into a Fraction.

    Accepts ints, Fractions, sympy Rationals, strings "p/q" or "p", and
    [num, den] pairs. Floats are rejected: they would silently lose precision.
    """
    if isinstance(value, bool):
        raise SchemaError(f"boolean is not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, sp.Rational):
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise SchemaError(f"decimal strings are not accepted as rationals: {value!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"malformed rational {value!r}") from exc
    if isinstance(value, (list, tuple)) and len(value) == 2 and all(
        isinstance(v, int) and not isinstance(v, bool) for v in value
    ):
        num, den = value
        if den == 0:
            raise SchemaError(f"zero denominator in {value!r}")
        return Fraction(num, den)
    raise SchemaError(f"cannot read {value!r} as an exact rational")


def format_rational(q: Fraction) -> str:
    """Serialize as "p/q" (integers as "p")."""
    return str(Fraction(q))


def vec(*entries: RationalLike) -> RatVec:
    return tuple(to_rational(e) for e in entries)


def as_vec(entries: Iterable[RationalLike]) -> RatVec:
    return tuple(to_rational(e) for e in entries)


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    if len(a) != len(b):
        raise DimensionMismatchError(f"dot of vectors of length {len(a)} and {len(b)}")
    return sum((x * y for x, y in zip(a, b)), ZERO)


def add(a: Sequence[Fraction], b: Sequence[Fraction]) -> RatVec:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> RatVec:
    return tuple(x - y for x, y in zip(a, b))


def scale(c: Fraction, a: Sequence[Fraction]) -> RatVec:
    return tuple(c * x for x in a)


def mat_vec(rows: Sequence[Sequence[Fraction]], x: Sequence[Fraction]) -> RatVec:
    return tuple(dot(row, x) for row in rows)


def is_integral(a: Sequence[Fraction]) -> bool:
    return all(Fraction(x).denominator == 1 for x in a)


def to_int_vec(a: Sequence[Fraction]) -> Tuple[int, ...]:
    if not is_integral(a):
        raise SchemaError(f"expected an integer vector, got {format_vec(a)}")
    return tuple(int(x) for x in a)


def format_vec(a: Sequence[Fraction]) -> str:
    return "(" + ", ".join(format_rational(x) for x in a) + ")"


# ---------------------------------------------------------------------------
# sympy-backed matrices
# ---------------------------------------------------------------------------

def _sp(x: RationalLike) -> sp.Rational:
    q = to_rational(x)
    return sp.Rational(q.numerator, q.denominator)


def to_sympy(rows: Sequence[Sequence[RationalLike]]) -> sp.Matrix:
    return sp.Matrix([[_sp(x) for x in row] for row in rows])


def from_sympy(m: sp.Matrix) -> RatMatrix:
    return tuple(tuple(to_rational(sp.Rational(m[i, j])) for j in range(m.cols)) for i in range(m.rows))


def det(rows: Sequence[Sequence[RationalLike]]) -> Fraction:
    if any(len(row) != len(rows) for row in rows):
        raise DimensionMismatchError("determinant of a non-square matrix")
    if not rows:
        return ONE
    return to_rational(sp.Rational(to_sympy(rows).det()))


def inverse(rows: Sequence[Sequence[RationalLike]]) -> RatMatrix:
    if det(rows) == 0:
        raise SingularMatrixError("matrix is singular over the rationals")
    return from_sympy(to_sympy(rows).inv())


def nullspace(rows: Sequence[Sequence[RationalLike]], ncols: int) -> list[RatVec]:
    """Basis of {x : rows·x = 0}; ``ncols`` is needed when ``rows`` is empty."""
    if not rows:
        return [tuple(ONE if i == j else ZERO for i in range(ncols)) for j in range(ncols)]
    return [tuple(to_rational(sp.Rational(x)) for x in v) for v in to_sympy(rows).nullspace()]


def solve(rows: Sequence[Sequence[RationalLike]], rhs: Sequence[RationalLike]) -> RatVec:
    """Solve a square nonsingular system exactly."""
    if det(rows) == 0:
        raise SingularMatrixError("linear system is singular")
    b = sp.Matrix([_sp(x) for x in rhs])
    sol = to_sympy(rows).LUsolve(b)
    return tuple(to_rational(sp.Rational(sol[i, 0])) for i in range(sol.rows))


def identity(n: int) -> RatMatrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


# ---------------------------------------------------------------------------
# closed-form predicates for n <= 3 (inner loops of the hull code)
# ---------------------------------------------------------------------------

def small_det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if n == 3:
        a, b, c = rows
        return (
            a[0] * (b[1] * c[2] - b[2] * c[1])
            - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0])
        )
    return det(rows)


def small_solve(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> RatVec | None:
    """Cramer's rule; returns None for a singular system."""
    d = small_det(rows)
    if d == 0:
        return None
    n = len(rows)
    out = []
    for col in range(n):
        replaced = [tuple(rhs[i] if j == col else rows[i][j] for j in range(n)) for i in range(n)]
        out.append(small_det(replaced) / d)
    return tuple(out)


def cross(a: Sequence[Fraction], b: Sequence[Fraction]) -> RatVec:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )
