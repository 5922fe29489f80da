"""Random covers for fuzzing."""

from __future__ import annotations

import random
from fractions import Fraction

from .cover import CoverError, DoubleCover, normalize_signs, validate
from .graph import HalfEdgeGraph


def random_cover(rng, max_vertices=6, max_edges=10, dilated_edge_rate=0.3):
    """Draw covers until one is connected and nontrivial.

    Vertices are dilated by a fair coin; an edge between two dilated vertices
    is itself dilated with probability ``dilated_edge_rate``; free edges get
    a uniform sign; lengths are ``p/q`` with ``1 <= p <= 9`` and ``1 <= q <= 4``.
    """
    if isinstance(rng, int):
        rng = random.Random(rng)
    while True:
        n = rng.randint(1, max_vertices)
        m = rng.randint(max(1, n - 1), max(max_edges, n - 1))
        vs = [f"v{i}" for i in range(n)]
        dilated = {v for v in vs if rng.random() < 0.5}
        ends = {}
        dil_edges = set()
        sign = {}
        lengths = {}
        for j in range(m):
            a, b = rng.choice(vs), rng.choice(vs)
            e = f"e{j}"
            ends[e] = (a, b)
            lengths[e] = Fraction(rng.randint(1, 9), rng.randint(1, 4))
            if a in dilated and b in dilated:
                if rng.random() < dilated_edge_rate:
                    dil_edges.add(e)
            elif a not in dilated and b not in dilated:
                sign[e] = rng.choice((1, -1))
        try:
            c = DoubleCover(HalfEdgeGraph(vs, ends), lengths, dilated, dil_edges, sign)
            validate(c)
        except CoverError:
            continue
        return normalize_signs(c)


def random_covers(seed, count, **kw):
    rng = random.Random(seed)
    return [random_cover(rng, **kw) for _ in range(count)]


def random_orientation_flips(rng, c):
    return [e for e in c.base.edges if rng.random() < 0.5]
