import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from prymatroid.catalog import corpus
from prymatroid.generate import random_cover
from prymatroid.graph import HalfEdgeGraph

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

CORPUS = corpus()


def small_random_corpus(seed=11, count=12, max_undilated=6):
    rng = random.Random(seed)
    out = {}
    while len(out) < count:
        c = random_cover(rng, max_vertices=5, max_edges=7)
        if len(c.undilated_edges) <= max_undilated:
            out[f"random{len(out)}"] = c
    return out


FULL_CORPUS = {**CORPUS, **small_random_corpus()}


@pytest.fixture(params=sorted(FULL_CORPUS))
def corpus_cover(request):
    return FULL_CORPUS[request.param]


covers = st.integers(min_value=0, max_value=2**32).map(lambda s: random_cover(random.Random(s)))
small_covers = st.integers(min_value=0, max_value=2**32).map(
    lambda s: random_cover(random.Random(s), max_vertices=5, max_edges=7)
)


@st.composite
def graphs(draw, max_vertices=6, max_edges=9, connected=False):
    n = draw(st.integers(1, max_vertices))
    vs = [f"v{i}" for i in range(n)]
    ends = {}
    if connected:
        for i in range(1, n):
            ends[f"t{i}"] = (vs[draw(st.integers(0, i - 1))], vs[i])
    m = draw(st.integers(0, max_edges))
    for j in range(m):
        ends[f"e{j}"] = (draw(st.sampled_from(vs)), draw(st.sampled_from(vs)))
    return HalfEdgeGraph(vs, ends)


def lengths_for(edges, seed=0):
    rng = random.Random(seed)
    return {e: Fraction(rng.randint(1, 9), rng.randint(1, 4)) for e in edges}


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
