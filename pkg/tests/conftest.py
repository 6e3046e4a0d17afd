from __future__ import annotations

import random
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from deltamin.colouring import BASE_COLOURS, DELTA, Classification, EdgeColouring, classify  # noqa: E402
from deltamin.graph import Graph  # noqa: E402
from deltamin.graph6 import parse_graph6  # noqa: E402
from deltamin.cli import corpus_text  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def random_subcubic(rng: random.Random, n: int, tries: int) -> Graph:
    """Add random pairs while both ends have degree < 3."""
    deg = [0] * n
    pairs: set[tuple[int, int]] = set()
    for _ in range(tries):
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v:
            continue
        e = (min(u, v), max(u, v))
        if e in pairs or deg[u] >= 3 or deg[v] >= 3:
            continue
        pairs.add(e)
        deg[u] += 1
        deg[v] += 1
    return Graph.build(n, pairs)


def random_delta_improper(rng: random.Random, g: Graph, delta_bias: float = 0.3) -> EdgeColouring:
    """Base colours form matchings; delta is placed freely, so only delta clashes occur."""
    order = list(g.edges)
    rng.shuffle(order)
    at: dict[int, set] = {v: set() for v in g.vertices()}
    assign = {}
    for u, v in order:
        free = [c for c in BASE_COLOURS if c not in at[u] and c not in at[v]]
        col = rng.choice(free) if free and rng.random() > delta_bias else DELTA
        assign[(u, v)] = col
        at[u].add(col)
        at[v].add(col)
    return EdgeColouring.from_mapping(g, assign)


def expand_vertex(g: Graph, v: int) -> Graph:
    """Replace a degree-3 vertex by a triangle, one triangle vertex per former neighbour."""
    nbrs = sorted(g.neighbours(v))
    ids = [v, g.n, g.n + 1]
    pairs = [e for e in g.edges if v not in e]
    pairs += [(ids[i], w) for i, w in enumerate(nbrs)]
    pairs += [(ids[0], ids[1]), (ids[1], ids[2]), (ids[0], ids[2])]
    return Graph.build(g.n + 2, pairs)


def add_pendant(g: Graph, v: int) -> Graph:
    return Graph.build(g.n + 1, list(g.edges) + [(v, g.n)])


@st.composite
def subcubic_graphs(draw, max_n: int = 9, min_edges: int = 1):
    n = draw(st.integers(2, max_n))
    seq = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), min_size=1, max_size=3 * n))
    deg = [0] * n
    pairs = set()
    for u, v in seq:
        e = (min(u, v), max(u, v))
        if u == v or e in pairs or deg[u] >= 3 or deg[v] >= 3:
            continue
        pairs.add(e)
        deg[u] += 1
        deg[v] += 1
    g = Graph.build(n, pairs)
    if g.m < min_edges:
        g = Graph.build(max(n, 2), [(0, 1)])
    return g


@pytest.fixture(scope="session")
def corpus() -> list[Graph]:
    return [parse_graph6(line) for line in corpus_text().split()]


def assert_proper(c: EdgeColouring) -> None:
    assert classify(c) == Classification.PROPER


@st.composite
def hard_graphs(draw):
    """Graphs built around G5, Petersen or P' so that s(G) > 0 is common."""
    from deltamin.constructions import g5, p_prime, petersen

    g = draw(st.sampled_from([g5, petersen, p_prime]))()
    for _ in range(draw(st.integers(0, 3))):
        op = draw(st.sampled_from(["drop", "pendant", "expand", "relabel"]))
        if op == "drop" and g.m > 1:
            g = g.remove_edges([draw(st.sampled_from(g.edges))])
        elif op == "pendant" and g.n < 20:
            low = [v for v in g.vertices() if g.degree(v) < 3]
            if low:
                g = add_pendant(g, draw(st.sampled_from(low)))
        elif op == "expand" and g.n < 20:
            full = g.vertices_of_degree(3)
            if full:
                g = expand_vertex(g, draw(st.sampled_from(full)))
        elif op == "relabel":
            perm = draw(st.permutations(range(g.n)))
            g = Graph.build(g.n, [(perm[u], perm[v]) for u, v in g.edges])
    return g
