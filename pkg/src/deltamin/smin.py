"""Exact delta-minimum colourings: s(G), c(G), gamma(G) and the vertex-deletion bound."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .colouring import (
    DELTA,
    BASE_COLOURS,
    Classification,
    EdgeColouring,
    InvariantViolation,
    classify,
    greedy_extend,
    repair_delta_improper,
    smallest_last_order,
    three_colour_edges,
)
from .graph import Edge, Graph, GraphError


class EmptyGraph(GraphError):
    pass


class NotThreeColourableRemainder(ValueError):
    pass


@dataclass(frozen=True)
class SminResult:
    s: int
    c: int
    gamma: Fraction
    witness: EdgeColouring


def colex_subsets(size: int, k: int) -> Iterator[tuple[int, ...]]:
    """k-subsets of ``range(size)`` in colexicographic order."""
    if k == 0:
        yield ()
        return
    for top in range(k - 1, size):
        for rest in colex_subsets(top, k - 1):
            yield rest + (top,)


def strip_pendants(g: Graph) -> tuple[set[Edge], list[Edge]]:
    """Repeatedly delete degree-1 vertices.

    Returns the surviving (core) edges and the stripped edges in removal order.
    """
    deg = [len(a) for a in g.adj]
    alive = set(g.edges)
    stripped: list[Edge] = []
    leaves = [v for v in g.vertices() if deg[v] == 1]
    while leaves:
        v = min(leaves)
        leaves.remove(v)
        if deg[v] != 1:
            continue
        e = next(f for f in alive if v in f)
        alive.discard(e)
        stripped.append(e)
        for x in e:
            deg[x] -= 1
            if deg[x] == 1 and x not in leaves:
                leaves.append(x)
    return alive, stripped


def _is_matching(edges: Iterable[Edge]) -> bool:
    seen: set[int] = set()
    for u, v in edges:
        if u in seen or v in seen:
            return False
        seen.add(u)
        seen.add(v)
    return True


def _solve_component(core: Graph, comp_edges: Sequence[Edge], budget: int) -> tuple[list[Edge], dict[Edge, object]]:
    order = smallest_last_order(core)
    deg = [len(a) for a in core.adj]
    # A delta-minimum delta class is a matching whose edges avoid degree-(2,2) ends.
    candidates = [e for e in comp_edges if not (deg[e[0]] == 2 and deg[e[1]] == 2)]
    for k in range(len(candidates) + 1):
        for pick in colex_subsets(len(candidates), k):
            removed = [candidates[i] for i in pick]
            if not _is_matching(removed):
                continue
            gone = set(removed)
            rest = [e for e in comp_edges if e not in gone]
            cols = three_colour_edges(core, rest, budget, order)
            if cols is not None:
                return removed, dict(zip(rest, cols))
    raise InvariantViolation("no deletion set made the component 3-edge-colourable")


def check_delta_edges(c: EdgeColouring) -> None:
    """Raise if some delta edge misses a base colour or has a bad degree pair."""
    g = c.graph
    for u, v in c.edges_of(DELTA):
        seen = (c.colours_at(u) | c.colours_at(v)) - {DELTA}
        degs = sorted((g.degree(u), g.degree(v)))
        if seen != set(BASE_COLOURS) or degs not in ([2, 3], [3, 3]):
            raise InvariantViolation(f"delta edge {(u, v)} violates the incidence property")


def s_exact(g: Graph, budget: int = 0) -> SminResult:
    """Exact s(G) with a delta-minimum witness colouring.

    Searches deletion sets D of increasing size (colex order) until ``g - D``
    is 3-edge-colourable. Pendant trees are stripped first and recoloured
    greedily afterwards; connected components are solved separately.
    ``budget`` caps the nodes of each 3-colourability search (0 = no cap).
    """
    if g.m == 0:
        raise EmptyGraph("graph has no edges")
    core_edges, stripped = strip_pendants(g)
    core = Graph.build(g.n, core_edges)
    delta_edges: list[Edge] = []
    assignment: dict[Edge, object] = {}
    for comp in core.components():
        vs = set(comp)
        comp_edges = [e for e in core.edges if e[0] in vs]
        if not comp_edges:
            continue
        removed, cols = _solve_component(core, comp_edges, budget)
        delta_edges.extend(removed)
        assignment.update(cols)
    for e in delta_edges:
        assignment[e] = DELTA
    for e in stripped:
        assignment[e] = DELTA
    witness = EdgeColouring.from_mapping(g, assignment)
    witness = greedy_extend(witness, reversed(stripped))
    if classify(witness) != Classification.PROPER:
        raise InvariantViolation("witness colouring is not proper")
    check_delta_edges(witness)
    s = len(delta_edges)
    return SminResult(s, g.m - s, 1 - Fraction(s, g.m), witness)


def s_upper_from_vertices(g: Graph, vs: Iterable[int], budget: int = 0) -> tuple[int, EdgeColouring]:
    """Upper bound on s(G) from vertices whose removal leaves a 3-edge-colourable graph.

    The remainder is 3-coloured, edges at ``vs`` get delta, and the result
    is repaired; the bound is the repaired delta-class size.
    """
    vs = set(vs)
    rest_graph = g.isolate(vs)
    cols = three_colour_edges(rest_graph, rest_graph.edges, budget)
    if cols is None:
        raise NotThreeColourableRemainder(f"G - {sorted(vs)} is not 3-edge-colourable")
    assignment = dict(zip(rest_graph.edges, cols))
    for e in g.edges:
        if e not in assignment:
            assignment[e] = DELTA
    repaired = repair_delta_improper(EdgeColouring.from_mapping(g, assignment))
    return len(repaired.edges_of(DELTA)), repaired


def gamma(g: Graph, budget: int = 0) -> Fraction:
    """Largest fraction of edges that fit in a 3-edge-colourable subgraph."""
    return s_exact(g, budget).gamma
