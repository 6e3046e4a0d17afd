"""Edge colourings with four colours, Kempe chains and the delta-repair procedure."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import Iterable, Mapping, Sequence

from . import kernel
from .graph import Edge, Graph, GraphError, edge


class Colour(IntEnum):
    ALPHA = 0
    BETA = 1
    GAMMA = 2
    DELTA = 3

    @property
    def label(self) -> str:
        return self.name.lower()

    @classmethod
    def parse(cls, text: str) -> Colour:
        return cls[text.upper()]


ALPHA, BETA, GAMMA, DELTA = Colour.ALPHA, Colour.BETA, Colour.GAMMA, Colour.DELTA
BASE_COLOURS = (ALPHA, BETA, GAMMA)


class Classification(Enum):
    PROPER = "proper"
    DELTA_IMPROPER = "delta-improper"
    INVALID = "invalid"


class ColouringError(ValueError):
    pass


class InvalidColouring(ColouringError):
    pass


class VertexNotInSubgraph(ColouringError):
    pass


class StaleComponent(ColouringError):
    pass


class BudgetExceeded(RuntimeError):
    """The 3-edge-colouring search visited more nodes than allowed."""


class InvariantViolation(AssertionError):
    """A property guaranteed by the theory failed to hold; indicates a bug or bad input."""


@dataclass(frozen=True)
class EdgeColouring:
    """A total assignment of colours to the edges of ``graph``.

    ``colours[i]`` is the colour of ``graph.edges[i]``.
    """

    graph: Graph
    colours: tuple[Colour, ...]

    def __post_init__(self) -> None:
        if len(self.colours) != self.graph.m:
            raise ColouringError(f"{len(self.colours)} colours for {self.graph.m} edges")

    @classmethod
    def from_mapping(cls, graph: Graph, assignment: Mapping[Edge, Colour]) -> EdgeColouring:
        norm = {edge(*e): Colour(c) for e, c in assignment.items()}
        missing = [e for e in graph.edges if e not in norm]
        if missing:
            raise ColouringError(f"uncoloured edges {missing}")
        extra = set(norm) - set(graph.edges)
        if extra:
            raise ColouringError(f"colours given for non-edges {sorted(extra)}")
        return cls(graph, tuple(norm[e] for e in graph.edges))

    @classmethod
    def uniform(cls, graph: Graph, colour: Colour) -> EdgeColouring:
        return cls(graph, (colour,) * graph.m)

    def colour(self, u: int, v: int) -> Colour:
        return self.colours[self.graph.edge_index((u, v))]

    def as_mapping(self) -> dict[Edge, Colour]:
        return dict(zip(self.graph.edges, self.colours))

    def at(self, v: int) -> list[tuple[int, Colour]]:
        """``(neighbour, colour)`` pairs around ``v`` ordered by neighbour."""
        return [(w, self.colour(v, w)) for w in sorted(self.graph.neighbours(v))]

    def colours_at(self, v: int) -> set[Colour]:
        return {c for _, c in self.at(v)}

    def edges_of(self, x: Colour) -> list[Edge]:
        return [e for e, c in zip(self.graph.edges, self.colours) if c == x]

    def with_changes(self, changes: Mapping[Edge, Colour]) -> EdgeColouring:
        cols = list(self.colours)
        for e, c in changes.items():
            cols[self.graph.edge_index(e)] = Colour(c)
        return EdgeColouring(self.graph, tuple(cols))

    def __len__(self) -> int:
        return len(self.colours)


def classify(c: EdgeColouring) -> Classification:
    """PROPER, DELTA_IMPROPER (only delta-delta clashes) or INVALID."""
    result = Classification.PROPER
    g = c.graph
    for v in g.vertices():
        seen: set[Colour] = set()
        for _, col in c.at(v):
            if col in seen:
                if col != DELTA:
                    return Classification.INVALID
                result = Classification.DELTA_IMPROPER
            seen.add(col)
    return result


def colour_class(c: EdgeColouring, x: Colour) -> set[Edge]:
    return set(c.edges_of(x))


def delta_class(c: EdgeColouring) -> set[Edge]:
    return colour_class(c, DELTA)


@dataclass(frozen=True)
class KempeComponent:
    """A maximal path or even cycle of the subgraph spanned by two colours.

    For a cycle the closing edge ``vertices[-1] -- vertices[0]`` is implicit.
    """

    colour_pair: tuple[Colour, Colour]
    vertices: tuple[int, ...]
    kind: str  # "PATH" or "EVEN_CYCLE"

    @property
    def edges(self) -> list[Edge]:
        vs = self.vertices
        out = [edge(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]
        if self.kind == "EVEN_CYCLE":
            out.append(edge(vs[-1], vs[0]))
        return out

    @property
    def ends(self) -> tuple[int, int] | None:
        if self.kind != "PATH":
            return None
        return self.vertices[0], self.vertices[-1]


def _pair_neighbour(c: EdgeColouring, v: int, x: Colour) -> int | None:
    found = None
    for w, col in c.at(v):
        if col == x:
            if found is not None:
                raise InvalidColouring(f"two {x.label} edges at vertex {v}")
            found = w
    return found


def kempe_component_at(c: EdgeColouring, x: Colour, y: Colour, v: int) -> KempeComponent:
    """The component of the ``{x, y}``-coloured subgraph containing ``v``.

    Paths start at ``v`` when ``v`` is an end; otherwise at the end reached
    by leaving ``v`` along its ``x`` edge. Cycles start at ``v`` and leave
    along the ``x`` edge.
    """
    if x == y:
        raise ColouringError("colour pair must be two distinct colours")
    x, y = Colour(x), Colour(y)
    nx = _pair_neighbour(c, v, x)
    ny = _pair_neighbour(c, v, y)
    if nx is None and ny is None:
        raise VertexNotInSubgraph(f"vertex {v} touches neither {x.label} nor {y.label}")

    def walk(start: int, first: int, colour: Colour) -> tuple[list[int], bool]:
        seq = [start]
        prev, cur, nxt_colour = start, first, colour
        while True:
            if cur == start:
                return seq, True
            seq.append(cur)
            nxt_colour = y if nxt_colour == x else x
            nxt = _pair_neighbour(c, cur, nxt_colour)
            if nxt is None:
                return seq, False
            prev, cur = cur, nxt

    pair = (x, y) if x < y else (y, x)
    if nx is None or ny is None:
        first, col = (nx, x) if nx is not None else (ny, y)
        seq, _ = walk(v, first, col)
        return KempeComponent(pair, tuple(seq), "PATH")
    seq, closed = walk(v, nx, x)
    if closed:
        return KempeComponent(pair, tuple(seq), "EVEN_CYCLE")
    end = seq[-1]
    first_colour = c.colour(end, seq[-2])
    full, _ = walk(end, seq[-2], first_colour)
    return KempeComponent(pair, tuple(full), "PATH")


def kempe_components(c: EdgeColouring, x: Colour, y: Colour) -> list[KempeComponent]:
    """All components of the ``{x, y}`` subgraph, ordered by least vertex."""
    seen: set[int] = set()
    out = []
    for v in c.graph.vertices():
        if v in seen:
            continue
        try:
            comp = kempe_component_at(c, x, y, v)
        except VertexNotInSubgraph:
            continue
        seen.update(comp.vertices)
        out.append(comp)
    return out


def kempe_swap(c: EdgeColouring, comp: KempeComponent) -> EdgeColouring:
    """Exchange the two colours of ``comp`` along its edges."""
    x, y = comp.colour_pair
    try:
        current = kempe_component_at(c, x, y, comp.vertices[0])
    except VertexNotInSubgraph as exc:
        raise StaleComponent("component does not match the colouring") from exc
    if set(current.edges) != set(comp.edges):
        raise StaleComponent("component does not match the colouring")
    changes = {}
    for e in comp.edges:
        col = c.colour(*e)
        changes[e] = y if col == x else x
    return c.with_changes(changes)


def _free_base_colour(c: EdgeColouring, v: int, skip: Edge) -> Colour | None:
    taken = {col for w, col in c.at(v) if edge(v, w) != skip}
    for col in BASE_COLOURS:
        if col not in taken:
            return col
    return None


def _repair_step(c: EdgeColouring, u: int, e1: Edge, e2: Edge) -> EdgeColouring:
    g = c.graph
    v = e1[0] if e1[1] == u else e1[1]
    w = e2[0] if e2[1] == u else e2[1]
    third = [f for f in g.incident(u) if f not in (e1, e2)]
    if g.degree(u) == 2 or c.colour(*third[0]) == DELTA:
        # every other edge at u is delta, so any base colour free at v works
        col = _free_base_colour(c, v, e1)
        if col is None:
            raise InvariantViolation(f"no free colour at {v}")
        return c.with_changes({e1: col})
    a = c.colour(*third[0])
    z = third[0][0] if third[0][1] == u else third[0][1]
    for far, e in ((v, e1), (w, e2)):
        for col in BASE_COLOURS:
            if col != a and col not in c.colours_at(far):
                return c.with_changes({e: col})
    # both far ends see the two base colours other than a
    b = next(col for col in BASE_COLOURS if col != a)
    path = kempe_component_at(c, a, b, u)
    if path.kind != "PATH" or u not in path.ends:
        raise InvariantViolation(f"vertex {u} is not an end of its ({a.label},{b.label}) chain")
    other = path.ends[1] if path.ends[0] == u else path.ends[0]
    choices = [(far, e) for far, e in sorted(((v, e1), (w, e2))) if far != other]
    if not choices:
        raise InvariantViolation("both delta edges end the Kempe path")
    far, e = choices[0]
    swapped = kempe_swap(c, path)
    if swapped.colour(u, z) != b or a in swapped.colours_at(far):
        raise InvariantViolation("Kempe exchange did not free the expected colour")
    return swapped.with_changes({e: a})


def repair_delta_improper(c: EdgeColouring) -> EdgeColouring:
    """Turn a delta-improper colouring into a proper one without adding delta edges.

    Each step removes one delta edge from the delta class; conflicts are
    handled in ascending order of the conflicting edge pair.
    """
    status = classify(c)
    if status == Classification.INVALID:
        raise InvalidColouring("colouring has a clash in a colour other than delta")
    g = c.graph
    while True:
        conflicts = []
        for u in g.vertices():
            ds = [e for e in g.incident(u) if c.colour(*e) == DELTA]
            for i in range(len(ds)):
                for j in range(i + 1, len(ds)):
                    conflicts.append((ds[i], ds[j], u))
        if not conflicts:
            return c
        e1, e2, u = min(conflicts)
        before = len(c.edges_of(DELTA))
        c = _repair_step(c, u, e1, e2)
        if len(c.edges_of(DELTA)) != before - 1 or classify(c) == Classification.INVALID:
            raise InvariantViolation("repair step did not shrink the delta class")


def smallest_last_order(g: Graph) -> list[int]:
    """Vertices in smallest-last order (reverse of min-degree peeling, ties by id)."""
    deg = [len(a) for a in g.adj]
    alive = [True] * g.n
    removed = []
    for _ in range(g.n):
        v = min((x for x in range(g.n) if alive[x]), key=lambda x: (deg[x], x))
        alive[v] = False
        removed.append(v)
        for w in g.adj[v]:
            if alive[w]:
                deg[w] -= 1
    return removed[::-1]


def search_order(n: int, edges: Sequence[Edge], order: Sequence[int]) -> list[int]:
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    return sorted(range(len(edges)), key=lambda i: (max(pos[edges[i][0]], pos[edges[i][1]]), min(pos[edges[i][0]], pos[edges[i][1]]), i))


def three_colour_edges(g: Graph, edges: Sequence[Edge], budget: int = 0, order: Sequence[int] | None = None) -> list[Colour] | None:
    """3-colour the subgraph of ``g`` formed by ``edges``; colours align with ``edges``."""
    if order is None:
        order = smallest_last_order(g)
    perm = search_order(g.n, edges, order)
    status, cols = kernel.three_edge_colour(g.n, [edges[i][0] for i in perm], [edges[i][1] for i in perm], budget)
    if status == kernel.OVER_BUDGET:
        raise BudgetExceeded(f"3-edge-colouring search exceeded {budget} nodes")
    if status != kernel.FOUND:
        return None
    out: list[Colour] = [ALPHA] * len(edges)
    for k, i in enumerate(perm):
        out[i] = BASE_COLOURS[cols[k]]
    return out


def decide_three_colourable(g: Graph, budget: int = 0) -> EdgeColouring | None:
    """A proper colouring with alpha, beta, gamma only, or ``None`` if none exists."""
    if g.max_degree > 3:
        raise GraphError("maximum degree exceeds 3")
    cols = three_colour_edges(g, g.edges, budget)
    return None if cols is None else EdgeColouring(g, tuple(cols))


def greedy_extend(c: EdgeColouring, edges: Iterable[Edge]) -> EdgeColouring:
    """Give each listed edge, in order, the least base colour free at both ends."""
    for e in edges:
        u, v = e
        taken = {col for w, col in c.at(u) if edge(u, w) != e} | {col for w, col in c.at(v) if edge(v, w) != e}
        col = next((x for x in BASE_COLOURS if x not in taken), None)
        if col is None:
            raise InvariantViolation(f"no free base colour for {e}")
        c = c.with_changes({e: col})
    return c
