"""
Toric test inputs: the named polytopes with their vertex choices and random
Delzant polygons inside [0,6]^2 obtained by corner cuts (toric blow-ups) of
rectangles and dilated simplices.
"""
from __future__ import annotations

import random
from typing import Dict, List, Optional, Sequence, Tuple

from okounkov.config import settings
from okounkov.services.toric_bodies import DelzantPolytope, ToricInput, vertex_chart

SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]
SIMPLEX = [(0, 0), (1, 0), (0, 1)]
RECTANGLE = [(0, 0), (2, 0), (2, 1), (0, 1)]
SIMPLEX3 = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]
CUBE = [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]

# indices refer to the point lists above
NAMED_INPUTS: Dict[str, Tuple[Sequence[Tuple[int, ...]], Optional[Sequence[int]]]] = {
    "square/1": (SQUARE, [0]),
    "square/2-opposite": (SQUARE, [0, 2]),
    "square/2-adjacent": (SQUARE, [0, 1]),
    "square/4": (SQUARE, None),
    "simplex/1": (SIMPLEX, [0]),
    "simplex/2": (SIMPLEX, [0, 1]),
    "simplex/3": (SIMPLEX, None),
    "rectangle/4": (RECTANGLE, None),
    "simplex3/4": (SIMPLEX3, None),
    "cube/8": (CUBE, None),
}


def named_input(name: str) -> ToricInput:
    try:
        points, chosen = NAMED_INPUTS[name]
    except KeyError:
        raise KeyError(f"unknown corpus input {name!r}; known: {sorted(NAMED_INPUTS)}") from None
    return ToricInput.from_points(points, chosen)


def _cut_corner(points: List[Tuple[int, int]], rng: random.Random) -> List[Tuple[int, int]]:
    """Blow up one vertex: replace v by v + c*u_1 and v + c*u_2 for 1 <= c < both edge lengths."""
    P = DelzantPolytope.from_points(points)
    candidates = [v for v in range(len(P.vertices)) if min(e.length for e in P.edges[v]) >= 2]
    if not candidates:
        return points
    v = rng.choice(candidates)
    chart = vertex_chart(P, v)
    c = rng.randint(1, min(e.length for e in chart.edges) - 1)
    vertex = tuple(int(x) for x in P.vertices[v])
    cut = [tuple(x + c * d for x, d in zip(vertex, e.direction)) for e in chart.edges]
    rest = [tuple(int(x) for x in w) for i, w in enumerate(P.vertices) if i != v]
    return rest + cut


def random_delzant_polygon(rng: random.Random) -> List[Tuple[int, int]]:
    if rng.random() < 0.5:
        a, b = rng.randint(1, 6), rng.randint(1, 6)
        points = [(0, 0), (a, 0), (a, b), (0, b)]
    else:
        d = rng.randint(1, 6)
        points = [(0, 0), (d, 0), (0, d)]
    for _ in range(rng.randint(0, 3)):
        points = _cut_corner(points, rng)
    return points


def random_corpus(seed: Optional[int] = None, size: Optional[int] = None) -> List[Tuple[str, ToricInput]]:
    seed = settings.CORPUS_SEED if seed is None else seed
    size = settings.CORPUS_SIZE if size is None else size
    rng = random.Random(seed)
    corpus = []
    for idx in range(size):
        P = DelzantPolytope.from_points(random_delzant_polygon(rng))
        count = rng.randint(1, len(P.vertices))
        chosen = tuple(rng.sample(range(len(P.vertices)), count))
        corpus.append((f"random/{idx}", ToricInput(P, chosen)))
    return corpus


def toric_corpus(seed: Optional[int] = None, size: Optional[int] = None) -> List[Tuple[str, ToricInput]]:
    """Named inputs followed by the seeded random polygons."""
    return [(name, named_input(name)) for name in NAMED_INPUTS] + random_corpus(seed, size)
