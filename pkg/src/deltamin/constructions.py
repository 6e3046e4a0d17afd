"""Named graphs, the two gamma-increasing reductions, and the dot product of cubic graphs."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations

from .graph import Edge, Graph, GraphError, edge

# Two Petersen spokes joined by the outer edge 0-1; removing them leaves the
# outer and inner 5-cycles as a 2-factor.
PETERSEN_SPOKE_PAIR: tuple[Edge, Edge] = ((0, 5), (1, 6))


class UnknownName(GraphError):
    pass


class NotPendant(GraphError):
    pass


class NotReducible(GraphError):
    pass


class EdgesAdjacent(GraphError):
    pass


class NotCubic(GraphError):
    pass


class CollisionEdge(GraphError):
    pass


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.build(10, outer + spokes + inner)


def g5() -> Graph:
    """C5 ``a1..a5`` (ids 0..4) with chords a2a4 and a3a5; a1 has degree 2."""
    return Graph.build(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3), (2, 4)])


def p_prime() -> Graph:
    """Two copies of G5 joined by an edge between their degree-2 vertices."""
    half = g5().edges
    return Graph.build(10, list(half) + [(u + 5, v + 5) for u, v in half] + [(0, 5)])


def complete(n: int) -> Graph:
    return Graph.build(n, combinations(range(n), 2))


def k33() -> Graph:
    return Graph.build(6, [(i, j) for i in range(3) for j in range(3, 6)])


def cycle(k: int) -> Graph:
    if k < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.build(k, [(i, (i + 1) % k) for i in range(k)])


def path(k: int) -> Graph:
    return Graph.build(k, [(i, i + 1) for i in range(k - 1)])


def star(leaves: int = 3) -> Graph:
    return Graph.build(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def prism(k: int) -> Graph:
    """Two k-cycles joined by a perfect matching ``i -- k+i``."""
    a = [(i, (i + 1) % k) for i in range(k)]
    b = [(k + i, k + (i + 1) % k) for i in range(k)]
    return Graph.build(2 * k, a + b + [(i, k + i) for i in range(k)])


def permutation_graph(perm: list[int]) -> Graph:
    """Two k-cycles joined by the matching ``i -- k+perm[i]``."""
    k = len(perm)
    if sorted(perm) != list(range(k)):
        raise GraphError("not a permutation")
    a = [(i, (i + 1) % k) for i in range(k)]
    b = [(k + i, k + (i + 1) % k) for i in range(k)]
    return Graph.build(2 * k, a + b + [(i, k + perm[i]) for i in range(k)])


def truncate(g: Graph) -> Graph:
    """Replace every degree-3 vertex by a triangle."""
    ids: dict[tuple[int, int], int] = {}
    pairs: list[tuple[int, int]] = []

    def port(v: int, w: int) -> int:
        key = (v, w) if g.degree(v) == 3 else (v, -1)
        if key not in ids:
            ids[key] = len(ids)
        return ids[key]

    for u, v in g.edges:
        pairs.append((port(u, v), port(v, u)))
    for v in g.vertices():
        if g.degree(v) == 3:
            a, b, c = (port(v, w) for w in sorted(g.neighbours(v)))
            pairs += [(a, b), (b, c), (a, c)]
        else:
            port(v, -1)
    return Graph.build(len(ids), pairs)


NAMED = {
    "PETERSEN": petersen,
    "G5": g5,
    "P_PRIME": p_prime,
    "K4": lambda: complete(4),
    "K33": k33,
}


def make_named(name: str) -> Graph:
    """Build ``PETERSEN``, ``G5``, ``P_PRIME``, ``K4``, ``K33`` or ``CYCLE(k)`` / ``Ck``."""
    key = name.strip().upper().replace("'", "_PRIME").replace("P′", "P_PRIME")
    if key in NAMED:
        return NAMED[key]()
    match = re.fullmatch(r"(?:CYCLE\((\d+)\)|C(\d+))", key)
    if match:
        return cycle(int(match.group(1) or match.group(2)))
    raise UnknownName(f"unknown graph name {name!r}")


@dataclass(frozen=True)
class ReductionStep:
    kind: str  # "PENDANT_REMOVAL" or "TRIANGLE_CONTRACTION"
    removed_vertices: tuple[int, ...]
    removed_edges: tuple[Edge, ...]
    new_vertex: int | None = None
    new_edges: tuple[Edge, ...] = ()
    relabel: dict[int, int] = field(default_factory=dict, compare=False)


def remove_pendant(g: Graph, v: int) -> tuple[Graph, ReductionStep]:
    """Delete a degree-1 vertex; higher vertex ids shift down by one."""
    if g.degree(v) != 1:
        raise NotPendant(f"vertex {v} has degree {g.degree(v)}")
    h, relabel = g.delete_vertices([v])
    return h, ReductionStep("PENDANT_REMOVAL", (v,), tuple(g.incident(v)), relabel=relabel)


def is_reducible_triangle(g: Graph, t: tuple[int, int, int]) -> bool:
    a, b, c = t
    if len({a, b, c}) != 3 or not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)):
        return False
    if any(g.degree(x) != 3 for x in t):
        return False
    outside = [next(iter(g.neighbours(x) - set(t))) for x in t]
    return len(set(outside)) == 3


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    return [(a, b, c) for a, b in g.edges for c in sorted(g.neighbours(a) & g.neighbours(b)) if c > b]


def reducible_triangles(g: Graph) -> list[tuple[int, int, int]]:
    return [t for t in triangles(g) if is_reducible_triangle(g, t)]


def reduce_triangle(g: Graph, t: tuple[int, int, int]) -> tuple[Graph, ReductionStep]:
    """Contract a reducible triangle to one vertex joined to its three outside neighbours.

    The new vertex takes the least id of the triangle; the other two ids are
    removed and the remaining ids close ranks.
    """
    t = tuple(sorted(t))
    if not is_reducible_triangle(g, t):
        raise NotReducible(f"{t} is not a reducible triangle")
    outside = [next(iter(g.neighbours(x) - set(t))) for x in t]
    keep = t[0]
    removed_edges = tuple(sorted({e for x in t for e in g.incident(x)}))
    pairs = [e for e in g.edges if e not in removed_edges] + [(keep, w) for w in outside]
    h, relabel = Graph.build(g.n, pairs).delete_vertices(t[1:])
    new = relabel[keep]
    new_edges = tuple(edge(new, relabel[w]) for w in outside)
    return h, ReductionStep("TRIANGLE_CONTRACTION", t, removed_edges, new, new_edges, relabel)


def reduce_all(g: Graph) -> tuple[Graph, list[ReductionStep]]:
    """Apply pendant removals and triangle contractions until neither applies."""
    steps = []
    while True:
        pend = [v for v in g.vertices() if g.degree(v) == 1]
        if pend:
            g, step = remove_pendant(g, pend[0])
            steps.append(step)
            continue
        tri = reducible_triangles(g)
        if tri:
            g, step = reduce_triangle(g, tri[0])
            steps.append(step)
            continue
        return g, steps


def _dot(g1: Graph, e1: Edge, f1: Edge, g2: Graph, uv: Edge, alt_pairing: bool) -> tuple[Graph, dict[int, int]]:
    if not (g1.is_cubic() and g2.is_cubic()):
        raise NotCubic("dot product needs two cubic graphs")
    a, b = e1
    c, d = f1
    if not (g1.has_edge(a, b) and g1.has_edge(c, d)):
        raise GraphError("e1 and f1 must be edges of g1")
    if len({a, b, c, d}) < 4:
        raise EdgesAdjacent(f"{e1} and {f1} share a vertex")
    u, v = uv
    if not g2.has_edge(u, v):
        raise GraphError(f"{uv} is not an edge of g2")
    nu = sorted(g2.neighbours(u) - {v})
    nv = sorted(g2.neighbours(v) - {u})
    if alt_pairing:
        nu.reverse()
        nv.reverse()
    rest, relabel = g2.delete_vertices([u, v])
    off = g1.n
    pairs = [e for e in g1.edges if edge(*e) not in (edge(a, b), edge(c, d))]
    pairs += [(x + off, y + off) for x, y in rest.edges]
    new = [(a, relabel[nu[0]] + off), (b, relabel[nu[1]] + off), (c, relabel[nv[0]] + off), (d, relabel[nv[1]] + off)]
    if len({edge(*p) for p in pairs + new}) != len(pairs) + len(new):
        raise CollisionEdge("attachment would create a parallel edge")
    h = Graph.build(g1.n + rest.n, pairs + new)
    return h, {k: val + off for k, val in relabel.items()}


def dot_product(g1: Graph, e1: Edge, f1: Edge, g2: Graph, uv: Edge, alt_pairing: bool = False) -> Graph:
    """Dot product: cut edges ``e1 = ab`` and ``f1 = cd`` of ``g1``, delete ``u, v`` from ``g2``.

    ``a``/``b`` are joined to the two other neighbours of ``u`` (least id to
    ``a``) and ``c``/``d`` to those of ``v``. ``alt_pairing`` swaps both
    pairings. ``g1`` keeps its ids; surviving ``g2`` vertices follow in order.
    """
    return _dot(g1, e1, f1, g2, uv, alt_pairing)[0]


def petersen_chain(base: Graph, matching: list[Edge] | None = None) -> tuple[Graph, list[list[int]]]:
    """Dot a Petersen copy onto every edge of a perfect matching of a cubic ``base``.

    Each copy is cut at ``PETERSEN_SPOKE_PAIR``; all base vertices vanish.
    Returns the graph and its 2-factor made of the copies' 5-cycles. The
    result is 3-edge-colourable exactly when ``base`` is, because the cut
    Petersen graph forces the same end-colour pattern as a single vertex pair.
    """
    if matching is None:
        matching = perfect_matching(base)
        if matching is None:
            raise GraphError("base graph has no perfect matching")
    if len(matching) * 2 != base.n or len({x for e in matching for x in e}) != base.n:
        raise GraphError("not a perfect matching")
    current = base
    where = {v: v for v in base.vertices()}
    cycles: list[list[int]] = []
    for x, y in matching:
        e1, f1 = PETERSEN_SPOKE_PAIR
        current, relabel = _dot(petersen(), e1, f1, current, (where[x], where[y]), False)
        where = {k: relabel[w] for k, w in where.items() if w in relabel}
        cycles = [[relabel[v] for v in cyc] for cyc in cycles] + [[0, 1, 2, 3, 4], [5, 7, 9, 6, 8]]
    return current, sorted(cycles)


def perfect_matching(g: Graph) -> list[Edge] | None:
    """First perfect matching found by backtracking on the least unmatched vertex."""
    matched = [False] * g.n
    chosen: list[Edge] = []

    def go() -> bool:
        try:
            v = matched.index(False)
        except ValueError:
            return True
        matched[v] = True
        for w in sorted(g.neighbours(v)):
            if not matched[w]:
                matched[w] = True
                chosen.append(edge(v, w))
                if go():
                    return True
                chosen.pop()
                matched[w] = False
        matched[v] = False
        return False

    return chosen if go() else None


def has_cycle(g: Graph, vertices: set[int]) -> bool:
    """Whether the subgraph induced by ``vertices`` contains a cycle."""
    sub_edges = [e for e in g.edges if e[0] in vertices and e[1] in vertices]
    parent = {v: v for v in vertices}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in sub_edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return True
        parent[ru] = rv
    return False


def is_cyclically_edge_connected(g: Graph, k: int) -> bool:
    """True when no set of fewer than ``k`` edges separates two cycles.

    Exhaustive over edge subsets; intended for small graphs and k <= 5.
    """
    for size in range(1, k):
        for cut in combinations(g.edges, size):
            h = g.remove_edges(cut)
            comps = h.components()
            if len(comps) < 2:
                continue
            with_cycles = sum(1 for comp in comps if has_cycle(h, set(comp)))
            if with_cycles >= 2:
                return False
    return True
