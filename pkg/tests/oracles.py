"""Independent brute-force oracles; none of these share code paths with the library search."""

from __future__ import annotations

from itertools import combinations, product

import numpy as np

from deltamin.graph import Graph


def adjacent_edge_pairs(g: Graph) -> list[tuple[int, int]]:
    edges = g.edges
    return [(i, j) for i, j in combinations(range(len(edges)), 2) if set(edges[i]) & set(edges[j])]


def brute_three_colourable(g: Graph) -> bool:
    """Enumerate every assignment in {0,1,2}^m (vectorised) and test properness."""
    m = g.m
    if m == 0:
        return True
    pairs = adjacent_edge_pairs(g)
    if not pairs:
        return True
    chunk_bits = min(m, 10)
    low = np.array(list(product(range(3), repeat=chunk_bits)), dtype=np.int8)
    for high in product(range(3), repeat=m - chunk_bits):
        cols = np.hstack([np.tile(np.array(high, dtype=np.int8), (len(low), 1)), low]) if high else low
        ok = np.ones(len(cols), dtype=bool)
        for i, j in pairs:
            ok &= cols[:, i] != cols[:, j]
        if ok.any():
            return True
    return False


def brute_min_delta(g: Graph) -> int:
    """Minimum number of colour-3 edges over all proper 4-edge-colourings.

    Exhaustive depth-first enumeration in plain edge order; a branch is cut
    only when its colour-3 count already reaches the best found.
    """
    edges = g.edges
    m = len(edges)
    nbrs = [[j for j in range(i) if set(edges[i]) & set(edges[j])] for i in range(m)]
    cols = [-1] * m
    best = [m + 1]

    def go(i: int, deltas: int) -> None:
        if deltas >= best[0]:
            return
        if i == m:
            best[0] = deltas
            return
        for c in range(4):
            if all(cols[j] != c for j in nbrs[i]):
                cols[i] = c
                go(i + 1, deltas + (c == 3))
                cols[i] = -1

    go(0, 0)
    return best[0]


def brute_s_by_deletion(g: Graph, k: int) -> bool:
    """Whether deleting some k edges leaves a 3-edge-colourable graph (numpy brute force)."""
    for drop in combinations(g.edges, k):
        if brute_three_colourable(g.remove_edges(drop)):
            return True
    return False


def brute_two_factors(g: Graph) -> list[frozenset]:
    """Every spanning edge subset in which all degrees equal 2."""
    out = []
    edges = g.edges
    for mask in range(1 << len(edges)):
        deg = [0] * g.n
        chosen = []
        for i, e in enumerate(edges):
            if mask >> i & 1:
                deg[e[0]] += 1
                deg[e[1]] += 1
                chosen.append(e)
        if all(d == 2 for d in deg):
            out.append(frozenset(chosen))
    return out


def cycle_lengths(edge_set) -> list[int]:
    adj: dict[int, list[int]] = {}
    for u, v in edge_set:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    seen: set[int] = set()
    out = []
    for s in adj:
        if s in seen:
            continue
        stack, size = [s], 0
        seen.add(s)
        while stack:
            x = stack.pop()
            size += 1
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        out.append(size)
    return sorted(out)


def matrix_odd_girth(g: Graph) -> float:
    """Smallest odd k with a closed walk of length k (trace of A^k > 0)."""
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1
    p = a.copy()
    a2 = a @ a
    for k in range(1, g.n + 1, 2):
        if np.trace(p) > 0:
            return k
        p = np.minimum(p @ a2, 1 << 20)
    return float("inf")


def kneser_5_2() -> Graph:
    subsets = list(combinations(range(5), 2))
    return Graph.build(10, [(i, j) for i, j in combinations(range(10), 2) if not set(subsets[i]) & set(subsets[j])])
