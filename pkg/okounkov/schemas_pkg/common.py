from fractions import Fraction
from typing import Annotated, List

from pydantic import PlainSerializer, PlainValidator

from okounkov.core.rational import format_rational, to_rational

# Exact rationals travel as "p/q" strings; ints and [num, den] pairs are read too.
Q = Annotated[
    Fraction,
    PlainValidator(to_rational),
    PlainSerializer(format_rational, return_type=str),
]

QVector = List[Q]
