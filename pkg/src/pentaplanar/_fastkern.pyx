# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled bit kernels for graphs with n <= 64.

Same contracts and return values as `_purekern`; see that module for the
shared conventions (edge order, code layout).  The dispatcher in `kernels`
falls back to the pure backend for larger inputs or when this extension is
not built.
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    """
    #define PP_POPCNT(x) __builtin_popcountll((unsigned long long)(x))
    #define PP_CTZ(x) __builtin_ctzll((unsigned long long)(x))
    """
    int PP_POPCNT(uint64_t x) nogil
    int PP_CTZ(uint64_t x) nogil

cdef enum:
    MAXN = 64
    MAXFLAT = 512    # sum of rotation degrees; planar implies 2m <= 6n - 12
    MAXCODE = 576    # MAXN + MAXFLAT


cdef inline uint64_t _above(int u) nogil:
    # bits strictly above u, shift-safe at u = 63
    if u >= 63:
        return 0
    return (<uint64_t>0xFFFFFFFFFFFFFFFFu) << (u + 1)


cdef int _load_rows(object rows, int n, uint64_t *adj) except -1:
    if n > MAXN:
        raise ValueError(f"compiled kernel limited to n <= {MAXN}, got {n}")
    cdef int i
    for i in range(n):
        adj[i] = rows[i]
    return 0


def cycle_counts(rows, int n):
    """Exact numbers of 3-, 4- and 5-cycles via per-edge path counting."""
    cdef uint64_t adj[MAXN]
    _load_rows(rows, n, adj)
    cdef unsigned long long t3 = 0, t4 = 0, t5 = 0
    cdef int u, v, a, c
    cdef uint64_t ru, rv, ra, rest, arest, crest, mask_u, mask_uv, not_a
    with nogil:
        for u in range(n):
            ru = adj[u]
            rest = ru & _above(u)
            while rest:
                v = PP_CTZ(rest)
                rest &= rest - 1
                rv = adj[v]
                t3 += PP_POPCNT(ru & rv)
                mask_u = ~(<uint64_t>1 << u)
                mask_uv = mask_u & ~(<uint64_t>1 << v)
                arest = ru & ~(<uint64_t>1 << v)
                while arest:
                    a = PP_CTZ(arest)
                    arest &= arest - 1
                    ra = adj[a]
                    t4 += PP_POPCNT(ra & rv & mask_u)
                    not_a = mask_uv & ~(<uint64_t>1 << a)
                    crest = rv & mask_u & ~(<uint64_t>1 << a)
                    while crest:
                        c = PP_CTZ(crest)
                        crest &= crest - 1
                        t5 += PP_POPCNT(ra & adj[c] & not_a)
    return t3 // 3, t4 // 4, t5 // 5


def c5_per_edge(rows, int n):
    """For each edge {u,v}: number of 5-cycles using that edge."""
    cdef uint64_t adj[MAXN]
    _load_rows(rows, n, adj)
    out = []
    cdef unsigned long long total
    cdef int u, v, a, c
    cdef uint64_t ru, rv, ra, rest, arest, crest, mask_uv, not_a
    for u in range(n):
        ru = adj[u]
        rest = ru & _above(u)
        while rest:
            v = PP_CTZ(rest)
            rest &= rest - 1
            rv = adj[v]
            mask_uv = ~(<uint64_t>1 << u) & ~(<uint64_t>1 << v)
            total = 0
            arest = ru & ~(<uint64_t>1 << v)
            while arest:
                a = PP_CTZ(arest)
                arest &= arest - 1
                ra = adj[a]
                not_a = mask_uv & ~(<uint64_t>1 << a)
                crest = rv & ~(<uint64_t>1 << u) & ~(<uint64_t>1 << a)
                while crest:
                    c = PP_CTZ(crest)
                    crest &= crest - 1
                    total += PP_POPCNT(ra & adj[c] & not_a)
            out.append(total)
    return out


def paths3_between(rows, int n, int u, int v):
    """Number of paths u-x-y-v on four distinct vertices."""
    cdef uint64_t adj[MAXN]
    _load_rows(rows, n, adj)
    cdef uint64_t rv = adj[v]
    cdef uint64_t mask_u = ~(<uint64_t>1 << u)
    cdef uint64_t xrest = adj[u] & ~(<uint64_t>1 << v)
    cdef unsigned long long total = 0
    cdef int x
    while xrest:
        x = PP_CTZ(xrest)
        xrest &= xrest - 1
        total += PP_POPCNT(adj[x] & rv & mask_u)
    return total


def paths3_per_edge(rows, int n):
    """paths3_between for every edge, in edge order."""
    cdef uint64_t adj[MAXN]
    _load_rows(rows, n, adj)
    out = []
    cdef unsigned long long total
    cdef int u, v, x
    cdef uint64_t ru, rv, rest, xrest, mask_u
    for u in range(n):
        ru = adj[u]
        rest = ru & _above(u)
        while rest:
            v = PP_CTZ(rest)
            rest &= rest - 1
            rv = adj[v]
            mask_u = ~(<uint64_t>1 << u)
            total = 0
            xrest = ru & ~(<uint64_t>1 << v)
            while xrest:
                x = PP_CTZ(xrest)
                xrest &= xrest - 1
                total += PP_POPCNT(adj[x] & rv & mask_u)
            out.append(total)
    return out


def embedding_min_code(rot, int n):
    """Canonical flat code of a connected rotation system (see _purekern)."""
    if n == 0:
        return ()
    if n == 1:
        return (0,)
    cdef int deg[MAXN]
    cdef int offs[MAXN + 1]
    cdef int flat[MAXFLAT]
    cdef int best[MAXCODE]
    cdef int cur[MAXCODE]
    cdef int lab[MAXN]
    cdef int order[MAXN]
    cdef int entry[MAXN]
    if n > MAXN:
        raise ValueError(f"compiled kernel limited to n <= {MAXN}, got {n}")
    cdef int i, j, total = 0
    for i in range(n):
        r = rot[i]
        deg[i] = len(r)
        offs[i] = total
        if total + deg[i] > MAXFLAT:
            raise ValueError("rotation system too large for compiled kernel")
        for j in range(deg[i]):
            flat[total + j] = r[j]
        total += deg[i]
    offs[n] = total
    cdef int code_len = n + total
    cdef int dmin = deg[0]
    for i in range(1, n):
        if deg[i] < dmin:
            dmin = deg[i]
    cdef bint have_best = False
    cdef bint disconnected = False
    cdef int u, v, rev, cmp_res
    with nogil:
        for u in range(n):
            if deg[u] != dmin:
                continue
            for j in range(deg[u]):
                v = flat[offs[u] + j]
                for rev in range(2):
                    if _bfs_code(flat, offs, deg, n, u, v, rev,
                                 lab, order, entry, cur) < 0:
                        disconnected = True
                        break
                    if not have_best:
                        for i in range(code_len):
                            best[i] = cur[i]
                        have_best = True
                    else:
                        cmp_res = 0
                        for i in range(code_len):
                            if cur[i] != best[i]:
                                cmp_res = -1 if cur[i] < best[i] else 1
                                break
                        if cmp_res < 0:
                            for i in range(code_len):
                                best[i] = cur[i]
                if disconnected:
                    break
            if disconnected:
                break
    if disconnected or not have_best:
        raise ValueError("embedding code requires a connected graph")
    return tuple([best[i] for i in range(code_len)])


cdef int _bfs_code(int *flat, int *offs, int *deg, int n, int su, int sv,
                   int rev, int *lab, int *order, int *entry,
                   int *out) noexcept nogil:
    cdef int i, k, x, w, d, pos, lw
    for i in range(n):
        lab[i] = -1
    lab[su] = 0
    lab[sv] = 1
    order[0] = su
    order[1] = sv
    entry[su] = sv
    entry[sv] = su
    cdef int nxt = 2
    cdef int op = 0
    for i in range(n):
        if i >= nxt:
            return -1
        x = order[i]
        d = deg[x]
        pos = 0
        for k in range(d):
            if flat[offs[x] + k] == entry[x]:
                pos = k
                break
        out[op] = d
        op += 1
        for k in range(d):
            if rev:
                w = flat[offs[x] + (pos - k + d) % d]
            else:
                w = flat[offs[x] + (pos + k) % d]
            lw = lab[w]
            if lw < 0:
                lw = nxt
                lab[w] = nxt
                order[nxt] = w
                entry[w] = x
                nxt += 1
            out[op] = lw
            op += 1
    if nxt != n:
        return -1
    return 0
