"""Odd-cycle certificates of delta edges, delta-edge rotation and structural verifiers.

Everything here assumes a proper, delta-minimum colouring (one whose delta
class has exactly s(G) edges). The verifiers encode properties that hold for
every such colouring; a failed check points at a bug or a non-minimum input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .colouring import (
    ALPHA,
    BETA,
    DELTA,
    GAMMA,
    Classification,
    Colour,
    EdgeColouring,
    InvariantViolation,
    VertexNotInSubgraph,
    classify,
    decide_three_colourable,
    kempe_component_at,
)
from .graph import Edge, Graph, edge, edge_set_distance, induced_edge_count, vertices_of

PAIRS: tuple[tuple[Colour, Colour], ...] = ((ALPHA, BETA), (BETA, GAMMA), (ALPHA, GAMMA))
CHECK_NAMES = (
    "delta_edge_colours",
    "certificate_count",
    "cycle_degree_two_spacing",
    "cycles_disjoint",
    "same_set_trichotomy",
    "degree_two_end_isolation",
    "pair_induced_edges",
    "triple_induced_edges",
)
SET_NAMES = {PAIRS[0]: "A", PAIRS[1]: "B", PAIRS[2]: "C"}


class NotDeltaMinimumEvidence(ValueError):
    pass


class TargetNotOnCycle(ValueError):
    pass


class PreconditionNotSpanning(ValueError):
    pass


class NoConsecutiveMinusPair(InvariantViolation):
    pass


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "PASS", "FAIL" or "SKIPPED"
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "FAIL"

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


def _check(name: str, ok: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, "PASS" if ok else "FAIL", detail)


def third_colour(pair: tuple[Colour, Colour]) -> Colour:
    return next(c for c in (ALPHA, BETA, GAMMA) if c not in pair)


@dataclass(frozen=True)
class OddCycleCertificate:
    """A delta edge ``uv`` with an alternating even path from ``u`` to ``v``.

    ``cycle`` lists the path from ``u`` to ``v``; the delta edge closes it.
    """

    delta_edge: Edge
    colour_pair: tuple[Colour, Colour]
    cycle: tuple[int, ...]

    @property
    def edges(self) -> list[Edge]:
        """Cycle edges in cyclic order, starting with the delta edge."""
        vs = self.cycle
        return [edge(vs[-1], vs[0])] + [edge(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]

    @property
    def set_name(self) -> str:
        return SET_NAMES[self.colour_pair]


@dataclass(frozen=True)
class DeltaClassPartition:
    a_set: frozenset[Edge]
    b_set: frozenset[Edge]
    c_set: frozenset[Edge]
    certificates: dict[Edge, tuple[OddCycleCertificate, ...]] = field(compare=False)

    def members(self, pair: tuple[Colour, Colour]) -> frozenset[Edge]:
        return {PAIRS[0]: self.a_set, PAIRS[1]: self.b_set, PAIRS[2]: self.c_set}[pair]

    def sets_of(self, e: Edge) -> set[str]:
        return {cert.set_name for cert in self.certificates[e]}

    def primary(self, e: Edge) -> OddCycleCertificate:
        return self.certificates[e][0]

    def cycles(self) -> list[OddCycleCertificate]:
        return [cert for e in sorted(self.certificates) for cert in self.certificates[e]]


def certificate_for(c: EdgeColouring, e: Edge, pair: tuple[Colour, Colour]) -> OddCycleCertificate | None:
    u, v = edge(*e)
    try:
        comp = kempe_component_at(c, pair[0], pair[1], u)
    except VertexNotInSubgraph:
        return None
    if comp.kind != "PATH" or set(comp.ends) != {u, v} or (len(comp.vertices) - 1) % 2:
        return None
    seq = comp.vertices if comp.vertices[0] == u else comp.vertices[::-1]
    return OddCycleCertificate((u, v), pair, tuple(seq))


def _require_proper(c: EdgeColouring) -> None:
    if classify(c) != Classification.PROPER:
        raise NotDeltaMinimumEvidence("colouring is not proper")


def classify_delta_edges(c: EdgeColouring) -> DeltaClassPartition:
    """Sort delta edges into A/B/C by which colour pair links their ends by an even path."""
    _require_proper(c)
    sets: dict[tuple[Colour, Colour], set[Edge]] = {p: set() for p in PAIRS}
    certs: dict[Edge, tuple[OddCycleCertificate, ...]] = {}
    for e in sorted(c.edges_of(DELTA)):
        found = []
        for pair in PAIRS:
            cert = certificate_for(c, e, pair)
            if cert is not None:
                found.append(cert)
                sets[pair].add(e)
        if not found:
            raise NotDeltaMinimumEvidence(f"delta edge {e} has no alternating even path between its ends")
        certs[e] = tuple(found)
    return DeltaClassPartition(frozenset(sets[PAIRS[0]]), frozenset(sets[PAIRS[1]]), frozenset(sets[PAIRS[2]]), certs)


def _oriented_cycle_edges(cycle: Sequence[int]) -> list[Edge]:
    """Cycle edges in a canonical cyclic order: from the least vertex towards its lesser cycle neighbour."""
    k = len(cycle)
    i = cycle.index(min(cycle))
    step = 1 if cycle[(i + 1) % k] < cycle[i - 1] else -1
    order = [cycle[(i + step * j) % k] for j in range(k)]
    return [edge(order[j], order[(j + 1) % k]) for j in range(k)]


def rotate_delta_edge(c: EdgeColouring, cert: OddCycleCertificate, target: Edge) -> EdgeColouring:
    """Move the delta colour of ``cert`` onto another edge of its odd cycle.

    The cycle is oriented canonically; the edge following the delta edge
    keeps its colour relative to the delta edge, i.e. after the move the edge
    following ``target`` carries the colour that followed the old delta edge,
    and the rest of the cycle alternates. Only cycle edges change, rotating
    back restores the original colouring, and walking the delta edge once
    around the cycle returns to the start.
    """
    target = edge(*target)
    cycle_edges = cert.edges
    if target not in cycle_edges:
        raise TargetNotOnCycle(f"{target} is not on the cycle of {cert.delta_edge}")
    current = certificate_for(c, cert.delta_edge, cert.colour_pair)
    if current != cert or c.colour(*cert.delta_edge) != DELTA:
        raise NotDeltaMinimumEvidence("certificate does not match the colouring")
    z = third_colour(cert.colour_pair)
    cyc = set(cycle_edges)
    for x in cert.cycle:
        for w, col in c.at(x):
            if edge(x, w) not in cyc and col != z:
                raise NotDeltaMinimumEvidence(f"edge {edge(x, w)} touches the cycle with colour {col.label}")
    if target == edge(*cert.delta_edge):
        return c
    ring = _oriented_cycle_edges(cert.cycle)
    k = len(ring)
    d, t = ring.index(edge(*cert.delta_edge)), ring.index(target)
    first = c.colour(*ring[(d + 1) % k])
    second = cert.colour_pair[1] if first == cert.colour_pair[0] else cert.colour_pair[0]
    changes = {ring[t]: DELTA}
    for i in range(1, k):
        changes[ring[(t + i) % k]] = first if i % 2 else second
    out = c.with_changes(changes)
    moved = certificate_for(out, target, cert.colour_pair)
    if classify(out) != Classification.PROPER or moved is None or set(moved.edges) != cyc:
        raise InvariantViolation("rotation broke the odd cycle")
    return out


def _end_degrees(g: Graph, e: Edge) -> list[int]:
    return sorted((g.degree(e[0]), g.degree(e[1])))


def verify_structure(c: EdgeColouring, p: DeltaClassPartition) -> list[CheckResult]:
    """Evaluate the structural properties of a delta-minimum colouring.

    Records are named by property (see ``CHECK_NAMES``) with the instance
    in brackets. A property
    with no instances yields a single vacuous PASS record.
    """
    g = c.graph
    deltas = sorted(p.certificates)
    out: dict[str, list[CheckResult]] = {k: [] for k in CHECK_NAMES}
    base = {ALPHA, BETA, GAMMA}
    for e in deltas:
        seen = (c.colours_at(e[0]) | c.colours_at(e[1])) - {DELTA}
        degs = _end_degrees(g, e)
        out["delta_edge_colours"].append(_check(f"delta_edge_colours[{e}]", seen == base and degs in ([2, 3], [3, 3]), f"colours {sorted(x.label for x in seen)}, degrees {degs}"))
        has_two = 2 in degs
        n_cert = len(p.certificates[e])
        out["certificate_count"].append(_check(f"certificate_count[{e}]", n_cert >= 1 and (n_cert == 2) == has_two, f"{n_cert} certificate(s)"))
        for cert in p.certificates[e]:
            cyc = cert.cycle
            bad = [i for i in range(len(cyc)) if g.degree(cyc[i]) == 2 and g.degree(cyc[(i + 1) % len(cyc)]) == 2]
            out["cycle_degree_two_spacing"].append(_check(f"cycle_degree_two_spacing[{e},{cert.set_name}]", not bad and len(cyc) % 2 == 1 and len(cyc) >= 3, f"cycle {list(cyc)}"))
    for e1, e2 in combinations(deltas, 2):
        for c1 in p.certificates[e1]:
            for c2 in p.certificates[e2]:
                shared = set(c1.cycle) & set(c2.cycle)
                out["cycles_disjoint"].append(_check(f"cycles_disjoint[{e1},{c1.set_name};{e2},{c2.set_name}]", not shared, f"shared {sorted(shared)}" if shared else ""))
        ind = induced_edge_count(g, set(e1) | set(e2))
        if p.sets_of(e1) & p.sets_of(e2):
            out["pair_induced_edges"].append(_check(f"pair_induced_edges[{e1},{e2}]", ind <= 3, f"same set, {ind} induced edges"))
        else:
            out["pair_induced_edges"].append(_check(f"pair_induced_edges[{e1},{e2}]", ind == 2, f"distinct sets, {ind} induced edges"))
    for e1 in deltas:
        for u, v1 in (e1, e1[::-1]):
            if g.degree(v1) != 2:
                continue
            others = [w for w in g.neighbours(u) if w != v1 and g.degree(w) == 2]
            out["degree_two_end_isolation"].append(_check(f"degree_two_end_isolation[{e1}]", not others, f"degree-2 neighbours of {u} besides {v1}: {sorted(others)}"))
            for e2 in deltas:
                if e2 != e1:
                    ind = induced_edge_count(g, set(e1) | set(e2))
                    out["degree_two_end_isolation"].append(_check(f"degree_two_end_isolation[{e1},{e2}]", ind == 2, f"{ind} induced edges"))
    for trio in combinations(deltas, 3):
        if set.intersection(*(p.sets_of(e) for e in trio)):
            ind = induced_edge_count(g, vertices_of(trio))
            out["triple_induced_edges"].append(_check(f"triple_induced_edges[{','.join(map(str, trio))}]", ind <= 4, f"{ind} induced edges"))
    try:
        out["same_set_trichotomy"] = verify_same_set_trichotomy(g, c, p)
    except PreconditionNotSpanning as exc:
        out["same_set_trichotomy"] = [CheckResult("same_set_trichotomy", "SKIPPED", str(exc))]
    results = []
    for name, recs in out.items():
        results.extend(recs if recs else [CheckResult(name, "PASS", "vacuous")])
    return results


def factor_colouring(g: Graph, cycles: Sequence[Sequence[int]]) -> EdgeColouring:
    """Colour vertex-disjoint cycles alternately alpha/beta, one delta edge per odd cycle,
    and every other edge gamma.

    Each odd cycle ``v0 .. vk`` gets delta on its closing edge ``vk v0``. The
    result is proper when the non-cycle edges form a matching, which holds for
    a 2-factor of a graph with maximum degree 3.
    """
    assignment: dict[Edge, Colour] = {e: GAMMA for e in g.edges}
    for cyc in cycles:
        k = len(cyc)
        for i in range(k - 1):
            assignment[edge(cyc[i], cyc[i + 1])] = ALPHA if i % 2 == 0 else BETA
        closing = edge(cyc[-1], cyc[0])
        assignment[closing] = DELTA if k % 2 else BETA
    return EdgeColouring.from_mapping(g, assignment)


def _chords(g: Graph, cyc: Sequence[int]) -> int:
    vs = set(cyc)
    on = {edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))}
    return sum(1 for e in g.edges if e[0] in vs and e[1] in vs and e not in on)


def verify_same_set_trichotomy(g: Graph, c: EdgeColouring, p: DeltaClassPartition) -> list[CheckResult]:
    """For spanning certificate families of cubic graphs, every pair of cycles is far
    apart, joined by three or more edges, or carries two chords each.

    When the certificate cycles span ``V(g)`` but the delta edges use more
    than one colour pair, the colouring is first normalised so that all
    cycles alternate alpha/beta with gamma on the remaining perfect matching.
    """
    if not g.is_cubic():
        raise PreconditionNotSpanning("graph is not cubic")
    if not p.certificates:
        raise PreconditionNotSpanning("no delta edges")
    primaries = [p.primary(e) for e in sorted(p.certificates)]
    covered = set().union(*(set(cert.cycle) for cert in primaries))
    if covered != set(g.vertices()):
        raise PreconditionNotSpanning(f"certificate cycles miss vertices {sorted(set(g.vertices()) - covered)}")
    if p.b_set or p.c_set:
        c = factor_colouring(g, [cert.cycle for cert in primaries])
        p = classify_delta_edges(c)
        if p.b_set or p.c_set:
            raise PreconditionNotSpanning("normalised colouring still uses several colour pairs")
        primaries = [p.primary(e) for e in sorted(p.certificates)]
    results = []
    for c1, c2 in combinations(primaries, 2):
        e1, e2 = set(c1.edges), set(c2.edges)
        dist = edge_set_distance(g, e1, e2)
        v1, v2 = set(c1.cycle), set(c2.cycle)
        joining = sum(1 for a, b in g.edges if (a in v1 and b in v2) or (a in v2 and b in v1))
        ch1, ch2 = _chords(g, c1.cycle), _chords(g, c2.cycle)
        cases = [name for name, ok in (("i", dist >= 2), ("ii", joining >= 3), ("iii", ch1 >= 2 and ch2 >= 2)) if ok]
        results.append(_check(f"same_set_trichotomy[{c1.delta_edge},{c2.delta_edge}]", bool(cases), f"cases {cases}; distance {dist}, {joining} joining edges, chords {ch1}/{ch2}"))
    return results


def _is_strong_matching(g: Graph, es: Iterable[Edge]) -> bool:
    es = list(es)
    vs = vertices_of(es)
    return len(vs) == 2 * len(es) and induced_edge_count(g, vs) == len(es)


def payan_strong_matching(g: Graph, c: EdgeColouring) -> EdgeColouring:
    """Rotate delta edges along their odd cycles until the delta class is a strong matching
    whose ends all have degree 3.

    Sets A, B, C are processed in turn, delta edges in ascending order. On
    each cycle a degree-3 vertex is marked ``+`` when its off-cycle edge
    reaches an end of an already placed delta edge of the same set, ``-``
    otherwise; the delta edge moves to the least pair of consecutive
    degree-3 ``-`` vertices.
    """
    if c.graph != g:
        raise ValueError("colouring belongs to a different graph")
    size = len(c.edges_of(DELTA))
    done: set[Edge] = set()
    for pair in PAIRS:
        placed: list[Edge] = []
        while True:
            part = classify_delta_edges(c)
            todo = sorted(e for e in part.members(pair) if e not in done)
            if not todo:
                break
            e = todo[0]
            cert = next(x for x in part.certificates[e] if x.colour_pair == pair)
            placed_ends = vertices_of(placed)
            cyc = cert.cycle
            k = len(cyc)
            minus = []
            for i, x in enumerate(cyc):
                if g.degree(x) != 3:
                    minus.append(False)
                    continue
                off = [w for w in g.neighbours(x) if w not in (cyc[i - 1], cyc[(i + 1) % k])]
                minus.append(not any(w in placed_ends for w in off))
            options = sorted(edge(cyc[i], cyc[(i + 1) % k]) for i in range(k) if minus[i] and minus[(i + 1) % k])
            if not options:
                raise NoConsecutiveMinusPair(f"cycle of {e} has no two consecutive unmarked degree-3 vertices")
            target = options[0]
            c = rotate_delta_edge(c, cert, target)
            done.add(target)
            placed.append(target)
    deltas = c.edges_of(DELTA)
    if len(deltas) != size or classify(c) != Classification.PROPER:
        raise InvariantViolation("strong-matching transformation changed the delta class size")
    if not _is_strong_matching(g, deltas) or any(g.degree(x) != 3 for x in vertices_of(deltas)):
        raise InvariantViolation(f"delta class {deltas} is not a strong matching of degree-3 ends")
    return c


def independent_cover(g: Graph, c: EdgeColouring) -> set[int]:
    """One end (the least id) of each delta edge of a strong-matching colouring.

    The returned vertices have degree 3, are pairwise non-adjacent, and their
    removal leaves a 3-edge-colourable graph; each of these is checked.
    """
    chosen = {min(e) for e in c.edges_of(DELTA)}
    if any(g.degree(v) != 3 for v in chosen) or any(g.has_edge(a, b) for a, b in combinations(chosen, 2)):
        raise InvariantViolation("cover vertices are not independent degree-3 vertices")
    if decide_three_colourable(g.isolate(chosen)) is None:
        raise InvariantViolation("removing the cover does not leave a 3-edge-colourable graph")
    return chosen
