"""Immutable simple graphs of maximum degree three."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

MAX_VERTICES = 64
MAX_DEGREE = 3

Edge = tuple[int, int]


class GraphError(ValueError):
    """Base class for graph construction and query errors."""


class DegreeExceeded(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class LoopEdge(GraphError):
    pass


class UnknownVertex(GraphError):
    pass


class NotDisjoint(GraphError):
    pass


class GraphTooLarge(GraphError):
    pass


def edge(u: int, v: int) -> Edge:
    """Normalise an unordered vertex pair to ``(min, max)``."""
    if u == v:
        raise LoopEdge(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0..n-1`` with degrees at most 3.

    Instances are immutable; every operation that changes the graph returns a
    new instance. ``edges`` is kept sorted so that edge indices are stable and
    can be used to align per-edge data such as colourings.
    """

    n: int
    edges: tuple[Edge, ...]
    adj: tuple[frozenset[int], ...] = field(repr=False, compare=False)
    _index: dict[Edge, int] = field(repr=False, compare=False, hash=False)

    @classmethod
    def build(cls, n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        if n > MAX_VERTICES:
            raise GraphTooLarge(f"{n} vertices exceeds the limit of {MAX_VERTICES}")
        adj: list[set[int]] = [set() for _ in range(n)]
        seen: set[Edge] = set()
        for u, v in pairs:
            for x in (u, v):
                if not 0 <= x < n:
                    raise UnknownVertex(f"vertex {x} not in [0, {n})")
            e = edge(u, v)
            if e in seen:
                raise DuplicateEdge(f"edge {e} given twice")
            seen.add(e)
            adj[u].add(v)
            adj[v].add(u)
            for x in e:
                if len(adj[x]) > MAX_DEGREE:
                    raise DegreeExceeded(f"vertex {x} would have degree {len(adj[x])}")
        edges = tuple(sorted(seen))
        return cls(n, edges, tuple(frozenset(a) for a in adj), {e: i for i, e in enumerate(edges)})

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self.adj[v])

    def neighbours(self, v: int) -> frozenset[int]:
        self._check(v)
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and (min(u, v), max(u, v)) in self._index

    def edge_index(self, e: Edge) -> int:
        try:
            return self._index[edge(*e)]
        except KeyError:
            raise GraphError(f"{e} is not an edge") from None

    def incident(self, v: int) -> list[Edge]:
        return [edge(v, w) for w in sorted(self.neighbours(v))]

    def degree_sequence(self) -> list[int]:
        return sorted((len(a) for a in self.adj), reverse=True)

    def vertices_of_degree(self, d: int) -> list[int]:
        return [v for v in range(self.n) if len(self.adj[v]) == d]

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def is_cubic(self) -> bool:
        return self.n > 0 and all(len(a) == 3 for a in self.adj)

    def remove_edges(self, removed: Iterable[Edge]) -> Graph:
        drop = {edge(*e) for e in removed}
        for e in drop:
            if e not in self._index:
                raise GraphError(f"{e} is not an edge")
        return Graph.build(self.n, (e for e in self.edges if e not in drop))

    def isolate(self, vs: Iterable[int]) -> Graph:
        """Drop every edge incident to ``vs``; vertex ids are kept."""
        gone = set(vs)
        for v in gone:
            self._check(v)
        return Graph.build(self.n, (e for e in self.edges if e[0] not in gone and e[1] not in gone))

    def delete_vertices(self, vs: Iterable[int]) -> tuple[Graph, dict[int, int]]:
        """Remove ``vs`` and relabel the survivors densely, preserving order.

        Returns the new graph and the old-to-new id map of surviving vertices.
        """
        gone = set(vs)
        for v in gone:
            self._check(v)
        relabel: dict[int, int] = {}
        for v in range(self.n):
            if v not in gone:
                relabel[v] = len(relabel)
        pairs = [(relabel[u], relabel[v]) for u, v in self.edges if u in relabel and v in relabel]
        return Graph.build(len(relabel), pairs), relabel

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by least vertex."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        stack.append(y)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def distances_from(self, sources: Iterable[int]) -> list[int | None]:
        dist: list[int | None] = [None] * self.n
        queue = deque()
        for s in sources:
            self._check(s)
            if dist[s] is None:
                dist[s] = 0
                queue.append(s)
        while queue:
            x = queue.popleft()
            for y in self.adj[x]:
                if dist[y] is None:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def bridges(self) -> list[Edge]:
        """Edges whose removal disconnects their component."""
        out = []
        for e in self.edges:
            h = self.remove_edges([e])
            if h.distances_from([e[0]])[e[1]] is None:
                out.append(e)
        return out

    def girth(self) -> float:
        """Length of a shortest cycle, ``inf`` for forests."""
        best = float("inf")
        for r in range(self.n):
            dist = [-1] * self.n
            parent = [-1] * self.n
            dist[r] = 0
            queue = deque([r])
            while queue:
                x = queue.popleft()
                for y in self.adj[x]:
                    if dist[y] < 0:
                        dist[y] = dist[x] + 1
                        parent[y] = x
                        queue.append(y)
                    elif parent[x] != y:
                        best = min(best, dist[x] + dist[y] + 1)
        return best

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise UnknownVertex(f"vertex {v} not in [0, {self.n})")

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.edges))


def build_graph(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a :class:`Graph`, rejecting loops, repeated edges and degree > 3."""
    return Graph.build(n, pairs)


def vertices_of(edges: Iterable[Edge]) -> set[int]:
    return {x for e in edges for x in e}


def induced_edge_count(g: Graph, vertex_subset: Iterable[int]) -> int:
    """Number of edges of ``g`` with both ends in ``vertex_subset``."""
    sub = set(vertex_subset)
    for v in sub:
        g._check(v)
    return sum(1 for u, v in g.edges if u in sub and v in sub)


def edge_set_distance(g: Graph, a: Iterable[Edge], b: Iterable[Edge]) -> float:
    """Length of a shortest path between the vertex sets spanned by ``a`` and ``b``.

    Returns ``inf`` when no such path exists. The edge sets must be
    vertex-disjoint.
    """
    va, vb = vertices_of(a), vertices_of(b)
    if not va or not vb:
        raise GraphError("edge sets must be non-empty")
    if va & vb:
        raise NotDisjoint(f"edge sets share vertices {sorted(va & vb)}")
    dist = g.distances_from(va)
    reach = [dist[v] for v in vb if dist[v] is not None]
    return min(reach) if reach else float("inf")


def _refine_pair(g1: Graph, g2: Graph) -> tuple[list[int], list[int]] | None:
    # Refine both graphs with one shared signature table so colours are comparable.
    c1 = [len(a) for a in g1.adj]
    c2 = [len(a) for a in g2.adj]
    while True:
        s1 = [(c1[v], tuple(sorted(c1[w] for w in g1.adj[v]))) for v in range(g1.n)]
        s2 = [(c2[v], tuple(sorted(c2[w] for w in g2.adj[v]))) for v in range(g2.n)]
        if sorted(s1) != sorted(s2):
            return None
        table = {s: i for i, s in enumerate(sorted(set(s1)))}
        n1 = [table[s] for s in s1]
        n2 = [table[s] for s in s2]
        if len(table) == len(set(c1)):
            return n1, n2
        c1, c2 = n1, n2


def find_isomorphism(g1: Graph, g2: Graph) -> dict[int, int] | None:
    """An edge-preserving bijection ``V(g1) -> V(g2)``, or ``None``.

    Exact backtracking over colour-refined candidate classes.
    """
    if g1.n != g2.n or g1.m != g2.m or g1.degree_sequence() != g2.degree_sequence():
        return None
    refined = _refine_pair(g1, g2)
    if refined is None:
        return None
    c1, c2 = refined
    # Extend along BFS order so each new vertex tends to have mapped neighbours.
    order: list[int] = []
    placed = [False] * g1.n
    for root in sorted(range(g1.n), key=lambda v: (sum(1 for w in range(g1.n) if c1[w] == c1[v]), v)):
        if placed[root]:
            continue
        placed[root] = True
        queue = deque([root])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in sorted(g1.adj[x]):
                if not placed[y]:
                    placed[y] = True
                    queue.append(y)
    by_colour: dict[int, list[int]] = {}
    for v in range(g2.n):
        by_colour.setdefault(c2[v], []).append(v)
    mapping: dict[int, int] = {}
    used = [False] * g2.n

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        for y in by_colour.get(c1[x], ()):
            if used[y]:
                continue
            ok = True
            for w, z in mapping.items():
                if (w in g1.adj[x]) != (z in g2.adj[y]):
                    ok = False
                    break
            if not ok:
                continue
            mapping[x] = y
            used[y] = True
            if extend(i + 1):
                return True
            del mapping[x]
            used[y] = False
        return False

    return dict(mapping) if extend(0) else None


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    return find_isomorphism(g1, g2) is not None
