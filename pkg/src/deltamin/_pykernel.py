"""Pure-Python 3-edge-colouring search; reference twin of ``_ckernel.pyx``."""

FOUND = 1
NONE = 0
OVER_BUDGET = -1


def three_edge_colour(n, us, vs, budget):
    """Backtracking 3-edge-colouring of the edges ``(us[i], vs[i])`` in the given order.

    Returns ``(status, colours)``. ``colours`` holds 0..2 per edge when
    ``status == FOUND`` and is ``None`` otherwise. ``budget <= 0`` disables
    the node cap.
    """
    m = len(us)
    if m == 0:
        return FOUND, []
    used = [0] * n
    inc = [[] for _ in range(n)]
    for i in range(m):
        inc[us[i]].append(i)
        inc[vs[i]].append(i)
    later = [[j for x in (us[i], vs[i]) for j in inc[x] if j > i] for i in range(m)]
    col = [-1] * m
    # top[i]: highest colour used by edges 0..i-1, for colour-permutation symmetry breaking
    top = [-1] * (m + 1)
    nodes = 0
    i = 0
    while 0 <= i < m:
        u = us[i]
        v = vs[i]
        c = col[i]
        if c >= 0:
            bit = 1 << c
            used[u] &= ~bit
            used[v] &= ~bit
        c += 1
        limit = min(2, top[i] + 1)
        placed = False
        while c <= limit:
            bit = 1 << c
            if not (used[u] | used[v]) & bit:
                used[u] |= bit
                used[v] |= bit
                ok = True
                for j in later[i]:
                    if (used[us[j]] | used[vs[j]]) == 7:
                        ok = False
                        break
                if ok:
                    placed = True
                    break
                used[u] &= ~bit
                used[v] &= ~bit
            c += 1
        if placed:
            nodes += 1
            if 0 < budget < nodes:
                return OVER_BUDGET, None
            col[i] = c
            top[i + 1] = c if c > top[i] else top[i]
            i += 1
            if i < m:
                col[i] = -1
        else:
            col[i] = -1
            i -= 1
    if i == m:
        return FOUND, col
    return NONE, None
