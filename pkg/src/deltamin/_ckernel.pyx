# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled 3-edge-colouring search; same algorithm and output as ``_pykernel``."""

from libc.stdlib cimport malloc, free

cdef enum:
    MAXLATER = 4


def three_edge_colour(int n, us, vs, long long budget):
    cdef int m = len(us)
    if m == 0:
        return 1, []
    cdef int *eu = <int *> malloc(m * sizeof(int))
    cdef int *ev = <int *> malloc(m * sizeof(int))
    cdef int *col = <int *> malloc(m * sizeof(int))
    cdef int *top = <int *> malloc((m + 1) * sizeof(int))
    cdef int *nlater = <int *> malloc(m * sizeof(int))
    cdef int *later = <int *> malloc(m * MAXLATER * sizeof(int))
    cdef int *used = <int *> malloc((n if n > 0 else 1) * sizeof(int))
    cdef int *inc = <int *> malloc((n if n > 0 else 1) * 3 * sizeof(int))
    cdef int *ninc = <int *> malloc((n if n > 0 else 1) * sizeof(int))
    cdef int i, j, k, x, u, v, c, limit, bit, placed, ok, status
    cdef long long nodes = 0
    try:
        for x in range(n):
            used[x] = 0
            ninc[x] = 0
        for i in range(m):
            eu[i] = us[i]
            ev[i] = vs[i]
            inc[eu[i] * 3 + ninc[eu[i]]] = i
            ninc[eu[i]] += 1
            inc[ev[i] * 3 + ninc[ev[i]]] = i
            ninc[ev[i]] += 1
        for i in range(m):
            nlater[i] = 0
            for x in (eu[i], ev[i]):
                for k in range(ninc[x]):
                    j = inc[x * 3 + k]
                    if j > i:
                        later[i * MAXLATER + nlater[i]] = j
                        nlater[i] += 1
            col[i] = -1
            top[i] = -1
        top[m] = -1
        i = 0
        while 0 <= i < m:
            u = eu[i]
            v = ev[i]
            c = col[i]
            if c >= 0:
                bit = 1 << c
                used[u] &= ~bit
                used[v] &= ~bit
            c += 1
            limit = top[i] + 1
            if limit > 2:
                limit = 2
            placed = 0
            while c <= limit:
                bit = 1 << c
                if not ((used[u] | used[v]) & bit):
                    used[u] |= bit
                    used[v] |= bit
                    ok = 1
                    for k in range(nlater[i]):
                        j = later[i * MAXLATER + k]
                        if (used[eu[j]] | used[ev[j]]) == 7:
                            ok = 0
                            break
                    if ok:
                        placed = 1
                        break
                    used[u] &= ~bit
                    used[v] &= ~bit
                c += 1
            if placed:
                nodes += 1
                if budget > 0 and nodes > budget:
                    return -1, None
                col[i] = c
                top[i + 1] = c if c > top[i] else top[i]
                i += 1
                if i < m:
                    col[i] = -1
            else:
                col[i] = -1
                i -= 1
        if i == m:
            return 1, [col[k] for k in range(m)]
        return 0, None
    finally:
        free(eu); free(ev); free(col); free(top); free(nlater)
        free(later); free(used); free(inc); free(ninc)
