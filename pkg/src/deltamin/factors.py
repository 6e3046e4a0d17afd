"""2-factors, oddness, odd girth, g+ and the lower-bound suite for gamma."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .colouring import BudgetExceeded, InvariantViolation
from .constructions import g5, p_prime, petersen, reducible_triangles
from .graph import Edge, Graph, GraphError, are_isomorphic, edge, induced_edge_count
from .smin import SminResult, s_exact
from .structure import CheckResult

INF = float("inf")
LARGE_GRAPH = 24


class NoTwoFactor(GraphError):
    pass


class PreconditionFailed(ValueError):
    pass


class Extremal(str, Enum):
    NOT_EXTREMAL = "NOT_EXTREMAL"
    PETERSEN = "PETERSEN"
    P_PRIME = "P_PRIME"
    G5_EXCEPTION = "G5_EXCEPTION"


@dataclass(frozen=True)
class TwoFactor:
    """Vertex-disjoint cycles covering every vertex; each cycle starts at its least vertex."""

    cycles: tuple[tuple[int, ...], ...]

    @property
    def odd_cycles(self) -> list[tuple[int, ...]]:
        return [c for c in self.cycles if len(c) % 2]

    @property
    def odd_count(self) -> int:
        return len(self.odd_cycles)

    @property
    def shortest_odd(self) -> float:
        """Length of the shortest odd cycle, ``inf`` when all cycles are even."""
        return min((len(c) for c in self.odd_cycles), default=INF)

    @property
    def lengths(self) -> list[int]:
        return sorted(len(c) for c in self.cycles)


def _cycles_of(n: int, edges: list[Edge]) -> tuple[tuple[int, ...], ...]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        a, b = sorted(adj[s])
        seq = [s]
        seen[s] = True
        prev, cur = s, a
        while cur != s:
            seq.append(cur)
            seen[cur] = True
            nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
            prev, cur = cur, nxt
        out.append(tuple(seq))
    return tuple(out)


def _perfect_matchings(vertices: list[int], allowed: set[Edge], adj: dict[int, list[int]]):
    matched: dict[int, bool] = {v: False for v in vertices}
    chosen: list[Edge] = []

    def go():
        v = next((x for x in vertices if not matched[x]), None)
        if v is None:
            yield list(chosen)
            return
        matched[v] = True
        for w in adj[v]:
            if not matched[w] and edge(v, w) in allowed:
                matched[w] = True
                chosen.append(edge(v, w))
                yield from go()
                chosen.pop()
                matched[w] = False
        matched[v] = False

    yield from go()


def enumerate_two_factors(g: Graph, allow_large: bool = False) -> list[TwoFactor]:
    """All 2-factors of ``g``.

    Degree-2 vertices keep both edges; the edges left out form a perfect
    matching of the degree-3 vertices, and each such matching is tried.
    Graphs above 24 vertices need ``allow_large``.
    """
    if g.n > LARGE_GRAPH and not allow_large:
        raise BudgetExceeded(f"2-factor enumeration on {g.n} > {LARGE_GRAPH} vertices needs opt-in")
    if g.n == 0 or any(len(a) < 2 for a in g.adj):
        raise NoTwoFactor("some vertex has degree below 2")
    v3 = g.vertices_of_degree(3)
    allowed = {e for e in g.edges if g.degree(e[0]) == 3 and g.degree(e[1]) == 3}
    adj = {v: sorted(w for w in g.adj[v] if g.degree(w) == 3) for v in v3}
    out = []
    for matching in _perfect_matchings(v3, allowed, adj):
        drop = set(matching)
        out.append(TwoFactor(_cycles_of(g.n, [e for e in g.edges if e not in drop])))
    if not out:
        raise NoTwoFactor("graph has no 2-factor")
    return out


def oddness(g: Graph, allow_large: bool = False) -> int:
    """Least number of odd cycles in a 2-factor."""
    return min(f.odd_count for f in enumerate_two_factors(g, allow_large))


def odd_girth(g: Graph) -> float:
    """Length of a shortest odd cycle; ``inf`` for bipartite graphs."""
    best = INF
    for r in g.vertices():
        dist = [-1] * g.n
        dist[r] = 0
        queue = deque([r])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    queue.append(y)
                elif dist[y] == dist[x]:
                    best = min(best, 2 * dist[x] + 1)
    return best


def g_plus(g: Graph, allow_large: bool = False) -> float | None:
    """Largest, over 2-factors, shortest odd cycle length; ``None`` without a 2-factor."""
    try:
        factors = enumerate_two_factors(g, allow_large)
    except NoTwoFactor:
        return None
    return max(f.shortest_odd for f in factors)


@dataclass(frozen=True)
class BoundResult:
    name: str
    rhs: Fraction | None
    status: str  # "PASS", "FAIL" or "SKIPPED"
    detail: str = ""

    @property
    def satisfied(self) -> bool | None:
        return None if self.status == "SKIPPED" else self.status == "PASS"


@dataclass
class MetricsReport:
    n: int
    m: int
    v2_count: int
    v3_count: int
    s: int
    gamma: Fraction
    odd_girth: float
    oddness: int | str | None
    g_plus: float | str | None
    bounds: list[BoundResult] = field(default_factory=list)
    extremal: Extremal = Extremal.NOT_EXTREMAL


def _inverse_or_zero(x: float | int) -> Fraction:
    return Fraction(0) if x == INF else Fraction(1, int(x))


def _bound(name: str, rhs: Fraction, gamma: Fraction, detail: str = "") -> BoundResult:
    return BoundResult(name, rhs, "PASS" if gamma >= rhs else "FAIL", detail)


def bound_suite(g: Graph, allow_large: bool = False, budget: int = 0, result: SminResult | None = None) -> MetricsReport:
    """Compute the invariants of ``g`` and check every applicable lower bound on gamma.

    Bounds are evaluated as exact rationals; those whose hypotheses fail are
    reported SKIPPED with the failing hypothesis named.
    """
    if result is None:
        result = s_exact(g, budget)
    gam, s = result.gamma, result.s
    n = g.n
    v1 = len(g.vertices_of_degree(1))
    v2 = len(g.vertices_of_degree(2))
    v3 = len(g.vertices_of_degree(3))
    og = odd_girth(g)
    factors: list[TwoFactor] | None = None
    factor_note = ""
    try:
        factors = enumerate_two_factors(g, allow_large)
    except NoTwoFactor:
        factor_note = "no 2-factor"
    except BudgetExceeded:
        factor_note = "BUDGET_EXCEEDED"
    if factors is not None:
        odd: int | str | None = min(f.odd_count for f in factors)
        gp: float | str | None = max(f.shortest_odd for f in factors)
    else:
        odd = gp = "BUDGET_EXCEEDED" if factor_note == "BUDGET_EXCEEDED" else None

    bounds = [_bound("odd_girth", 1 - Fraction(2, 3) * _inverse_or_zero(og), gam, f"g_odd = {og}")]

    is_g5 = are_isomorphic(g, g5())
    if is_g5:
        bounds.append(BoundResult("thirteen_fifteenths", None, "SKIPPED", "graph is G5"))
    elif v3 == 0:
        bounds.append(BoundResult("thirteen_fifteenths", None, "SKIPPED", "no degree-3 vertex"))
    elif not g.is_connected():
        bounds.append(BoundResult("thirteen_fifteenths", None, "SKIPPED", "graph is disconnected"))
    else:
        rhs = 1 - Fraction(2, 15) / (1 + Fraction(2, 3) * Fraction(v2, v3))
        bounds.append(_bound("thirteen_fifteenths", rhs, gam, f"|V2| = {v2}, |V3| = {v3}"))

    if factors is None:
        for name in ("g_plus", "eleven_twelfths", "odd_cycles_per_factor"):
            bounds.append(BoundResult(name, None, "SKIPPED", factor_note))
    else:
        if v1:
            bounds.append(BoundResult("g_plus", None, "SKIPPED", "graph has degree-1 vertices"))
        else:
            rhs = 1 - Fraction(2 * n, 3 * n - v2) * _inverse_or_zero(gp)
            bounds.append(_bound("g_plus", rhs, gam, f"g+ = {gp}"))
        if v1:
            bounds.append(BoundResult("eleven_twelfths", None, "SKIPPED", "graph has degree-1 vertices"))
        elif 3 * v2 > n:
            bounds.append(BoundResult("eleven_twelfths", None, "SKIPPED", "|V2| > n/3"))
        elif gp < 11:
            bounds.append(BoundResult("eleven_twelfths", None, "SKIPPED", f"g+ = {gp} < 11"))
        else:
            rhs = max(1 - Fraction(3, 4) * _inverse_or_zero(gp), Fraction(11, 12))
            bounds.append(_bound("eleven_twelfths", rhs, gam, f"g+ = {gp}"))
        fewest = min(f.odd_count for f in factors)
        bounds.append(BoundResult("odd_cycles_per_factor", Fraction(s), "PASS" if fewest >= s else "FAIL", f"fewest odd cycles {fewest}, s = {s}"))

    return MetricsReport(
        n=n,
        m=g.m,
        v2_count=v2,
        v3_count=v3,
        s=s,
        gamma=gam,
        odd_girth=og,
        oddness=odd,
        g_plus=gp,
        bounds=bounds,
        extremal=_recognise(g, gam, is_g5),
    )


def _recognise(g: Graph, gam: Fraction, is_g5: bool) -> Extremal:
    if is_g5:
        return Extremal.G5_EXCEPTION
    if gam != Fraction(13, 15):
        return Extremal.NOT_EXTREMAL
    if are_isomorphic(g, petersen()):
        return Extremal.PETERSEN
    if are_isomorphic(g, p_prime()):
        return Extremal.P_PRIME
    if g.is_connected():
        raise InvariantViolation("connected graph with gamma = 13/15 is neither Petersen nor P'")
    return Extremal.NOT_EXTREMAL


def extremal_recognize(g: Graph, budget: int = 0) -> Extremal:
    """Which extremal graph ``g`` is: the G5 exception, Petersen, P', or none."""
    if are_isomorphic(g, g5()):
        return Extremal.G5_EXCEPTION
    return _recognise(g, s_exact(g, budget).gamma, False)


def verify_c5_factors(g: Graph, s: int | None = None, allow_large: bool = False) -> CheckResult:
    """When a cubic graph without reducible triangles has a 2-factor of s(G) 5-cycles,
    every 2-factor consists of s(G) 5-cycles.
    """
    if not g.is_cubic():
        raise PreconditionFailed("graph is not cubic")
    if reducible_triangles(g):
        raise PreconditionFailed("graph has a reducible triangle")
    if s is None:
        s = s_exact(g).s
    factors = enumerate_two_factors(g, allow_large)
    if not any(f.lengths == [5] * s for f in factors):
        raise PreconditionFailed(f"no 2-factor of {s} cycles of length 5")
    bad = [f for f in factors if f.lengths.count(5) < s]
    return CheckResult("C5_FACTOR", "FAIL" if bad else "PASS", f"{len(factors)} 2-factors, {len(bad)} without {s} five-cycles")


def _is_induced(g: Graph, cyc: tuple[int, ...]) -> bool:
    return induced_edge_count(g, cyc) == len(cyc)


def permutation_graph_check(g: Graph, s: int | None = None, allow_large: bool = False) -> CheckResult:
    """A cubic graph factored into s(G) induced odd cycles of length >= 5 is a permutation
    graph (two odd cycles of equal length), and the Petersen graph when its girth is 5.
    """
    if not g.is_cubic():
        raise PreconditionFailed("graph is not cubic")
    if s is None:
        s = s_exact(g).s
    factors = enumerate_two_factors(g, allow_large)
    good = [
        f
        for f in factors
        if len(f.cycles) == s and all(len(c) % 2 and len(c) >= 5 and _is_induced(g, c) for c in f.cycles)
    ]
    if not good:
        raise PreconditionFailed(f"no 2-factor of s(G) = {s} induced odd cycles of length >= 5")
    perm = [f for f in good if len(f.cycles) == 2 and len(f.cycles[0]) == len(f.cycles[1])]
    detail = f"{len(perm)} qualifying 2-factors with two equal induced odd cycles"
    ok = bool(perm)
    if ok and g.girth() == 5:
        iso = are_isomorphic(g, petersen())
        ok = iso
        detail += f"; girth 5, isomorphic to Petersen: {iso}"
    return CheckResult("PERMUTATION_GRAPH", "PASS" if ok else "FAIL", detail)
