# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels.  Same contracts and outputs as ``_pykernels``.

Graph kernels take graphs with at most 64 vertices (one machine word per
adjacency row); the partition scan takes covers of at most 31 vertices.
"""
from libc.stdlib cimport malloc, calloc, free
from libc.stdint cimport uint32_t, int64_t

from wellcov.errors import OracleBudgetExceeded

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

MAX_VERTICES = 64
MAX_COVER = 31
cdef enum:
    LOW_BITS = 16
    STACK = 66


cdef inline int popc(u64 x) nogil:
    return __builtin_popcountll(x)


cdef inline int ctz(u64 x) nogil:
    return __builtin_ctzll(x)


cdef inline u64 full_mask(int n) nogil:
    if n >= 64:
        return <u64>0xFFFFFFFFFFFFFFFF
    return ((<u64>1) << n) - 1


cdef u64* load_closed(adj) except NULL:
    cdef int n = len(adj)
    cdef u64* closed = <u64*>malloc((n + 1) * sizeof(u64))
    if closed == NULL:
        raise MemoryError()
    cdef int v
    for v in range(n):
        closed[v] = (<u64>adj[v]) | ((<u64>1) << v)
    return closed


cdef int pivot(u64 p, u64 x, u64* closed) nogil:
    cdef u64 cand = p | x
    cdef int best = -1
    cdef int best_count = 1 << 30
    cdef int u, c
    while cand:
        u = ctz(cand)
        c = popc(p & closed[u])
        if c < best_count:
            best = u
            best_count = c
            if c == 0:
                break
        cand &= cand - 1
    return best


cdef long long bron_kerbosch(int n, u64* closed, long long budget, list out, u64* ext) except -1:
    # ext = [min_size, min_mask, max_size, max_mask]
    cdef u64 R[STACK]
    cdef u64 P[STACK]
    cdef u64 X[STACK]
    cdef u64 T[STACK]
    cdef bint fresh[STACK]
    cdef int top = 0
    cdef long long count = 0
    cdef u64 low, keep
    cdef int v, s
    R[0] = 0
    P[0] = full_mask(n)
    X[0] = 0
    fresh[0] = 1
    ext[0] = 1 << 30
    ext[1] = 0
    ext[2] = 0
    ext[3] = 0
    cdef bint any_found = 0
    while top >= 0:
        if fresh[top]:
            fresh[top] = 0
            if P[top] == 0:
                if X[top] == 0:
                    count += 1
                    if count > budget:
                        raise OracleBudgetExceeded(f"more than {budget} maximal independent sets")
                    if out is not None:
                        out.append(R[top])
                    s = popc(R[top])
                    if s < <int>ext[0]:
                        ext[0] = s
                        ext[1] = R[top]
                    if not any_found or s > <int>ext[2]:
                        ext[2] = s
                        ext[3] = R[top]
                    any_found = 1
                top -= 1
                continue
            T[top] = P[top] & closed[pivot(P[top], X[top], closed)]
        if T[top] == 0:
            top -= 1
            continue
        low = T[top] & (~T[top] + 1)
        v = ctz(low)
        T[top] ^= low
        keep = ~closed[v]
        R[top + 1] = R[top] | low
        P[top + 1] = P[top] & keep
        X[top + 1] = X[top] & keep
        P[top] &= ~low
        X[top] |= low
        fresh[top + 1] = 1
        top += 1
    return count


def mis_all(adj, long long budget):
    cdef int n = len(adj)
    cdef u64 ext[4]
    cdef u64* closed = load_closed(adj)
    out = []
    try:
        bron_kerbosch(n, closed, budget, out, ext)
    finally:
        free(closed)
    return [int(x) for x in out]


def mis_extremes(adj, long long budget):
    cdef int n = len(adj)
    cdef u64 ext[4]
    cdef u64* closed = load_closed(adj)
    cdef long long count
    try:
        count = bron_kerbosch(n, closed, budget, None, ext)
    finally:
        free(closed)
    return int(count), int(ext[0]), int(ext[1]), int(ext[2]), int(ext[3])


# ------------------------------------------------------------ partition scan

def partition_scan(adj_c, types, bint stop_on_change=False, bint collect=False):
    cdef int k = len(adj_c)
    cdef uint32_t full = <uint32_t>((1LL << k) - 1)
    cdef long long total = 1LL << k
    cdef long long n_out = len(types)
    cdef uint32_t* f = <uint32_t*>calloc(total, sizeof(uint32_t))
    cdef uint32_t* g = <uint32_t*>calloc(total, sizeof(uint32_t))
    cdef uint32_t* adj = <uint32_t*>malloc((k + 1) * sizeof(uint32_t))
    cdef int lo_bits = k if k < LOW_BITS else LOW_BITS
    cdef long long lo_count = 1LL << lo_bits
    cdef uint32_t* h_lo = <uint32_t*>malloc(lo_count * sizeof(uint32_t))
    cdef unsigned char* ind_lo = <unsigned char*>malloc(lo_count)
    cdef unsigned char* pc_lo = <unsigned char*>malloc(lo_count)
    if f == NULL or g == NULL or adj == NULL or h_lo == NULL or ind_lo == NULL or pc_lo == NULL:
        free(f); free(g); free(adj); free(h_lo); free(ind_lo); free(pc_lo)
        raise MemoryError()
    cdef long long s, lo, hi, b, processed = 0, n_valid = 0
    cdef long long min_b = -1, max_b = -1, min_size = -1, max_size = -1, size, base = -1
    cdef uint32_t t, a, hh, hb, low
    cdef int i, half, v, pch
    cdef bint indh, done = 0
    valid = [] if collect else None
    try:
        for i in range(k):
            adj[i] = <uint32_t>adj_c[i]
        for x in types:
            t = <uint32_t>x
            f[t] |= t
            g[t] += 1
        for i in range(k):
            half = 1 << i
            for s in range(total):
                if s & half:
                    f[s] |= f[s ^ half]
                    g[s] += g[s ^ half]
        h_lo[0] = 0
        ind_lo[0] = 1
        pc_lo[0] = 0
        for i in range(lo_bits):
            half = 1 << i
            for lo in range(half):
                h_lo[half + lo] = h_lo[lo] | adj[i]
                ind_lo[half + lo] = ind_lo[lo] and (adj[i] & <uint32_t>lo) == 0
                pc_lo[half + lo] = pc_lo[lo] + 1
        for hi in range(1LL << (k - lo_bits)):
            hh = 0
            indh = 1
            pch = 0
            b = hi << lo_bits
            while b:
                low = <uint32_t>(b & (-b))
                v = ctz(low)
                if adj[v] & <uint32_t>(hi << lo_bits):
                    indh = 0
                hh |= adj[v]
                pch += 1
                b ^= low
            if not indh:
                processed += lo_count
                continue
            for lo in range(lo_count):
                if not ind_lo[lo] or (hh & <uint32_t>lo):
                    continue
                b = (hi << lo_bits) | lo
                a = full ^ <uint32_t>b
                hb = h_lo[lo] | hh
                if a & ~(hb | f[a]):
                    continue
                size = (k - pc_lo[lo] - pch) + n_out - g[a]
                if base < 0:
                    base = size
                n_valid += 1
                if min_b < 0 or size < min_size:
                    min_size = size
                    min_b = b
                if max_b < 0 or size > max_size:
                    max_size = size
                    max_b = b
                if collect:
                    valid.append(b)
                if stop_on_change and size != base:
                    processed += lo + 1
                    done = 1
                    break
            if done:
                break
            processed += lo_count
    finally:
        free(f); free(g); free(adj); free(h_lo); free(ind_lo); free(pc_lo)
    return int(processed), int(n_valid), int(min_size), int(min_b), int(max_size), int(max_b), valid


# ------------------------------------------------------------ degeneracy tree

cdef inline int settle(int n, u64* adj, u64* r, u64* chosen, int* depth, long long* nodes) nogil:
    cdef u64 rest = r[0]
    cdef u64 iso = 0
    cdef u64 low
    cdef int v, d, best_v = -1, best_d = 1 << 30, c
    while rest:
        low = rest & (~rest + 1)
        v = ctz(low)
        d = popc(adj[v] & r[0])
        if d == 0:
            iso |= low
        elif d < best_d:
            best_v = v
            best_d = d
        rest ^= low
    if iso:
        c = popc(iso)
        nodes[0] += c
        r[0] &= ~iso
        chosen[0] |= iso
        depth[0] += c
    return best_v


def degen_search(adj, bint early_exit=True):
    cdef int n = len(adj)
    cdef u64 A[STACK]
    cdef u64 closed[STACK]
    cdef u64 SR[STACK]
    cdef u64 SC[STACK]
    cdef u64 ST[STACK]
    cdef int SD[STACK]
    cdef int top = -1
    cdef int v, depth, first_depth = -1, min_depth = -1, max_depth = -1
    cdef u64 r, chosen, low, min_mask = 0, max_mask = 0
    cdef long long leaves = 0, nodes = 1
    cdef bint stopped = 0, have = 1
    for v in range(n):
        A[v] = <u64>adj[v]
        closed[v] = A[v] | ((<u64>1) << v)
    r = full_mask(n)
    chosen = 0
    depth = 0
    v = settle(n, A, &r, &chosen, &depth, &nodes)
    while have:
        have = 0
        if r == 0:
            leaves += 1
            if min_depth < 0 or depth < min_depth:
                min_depth = depth
                min_mask = chosen
            if depth > max_depth:
                max_depth = depth
                max_mask = chosen
            if first_depth < 0:
                first_depth = depth
            elif early_exit and depth != first_depth:
                stopped = 1
                break
        else:
            top += 1
            SR[top] = r
            SC[top] = chosen
            SD[top] = depth
            ST[top] = closed[v] & r
        while top >= 0:
            if ST[top] == 0:
                top -= 1
                continue
            low = ST[top] & (~ST[top] + 1)
            ST[top] ^= low
            nodes += 1
            r = SR[top] & ~closed[ctz(low)]
            chosen = SC[top] | low
            depth = SD[top] + 1
            v = settle(n, A, &r, &chosen, &depth, &nodes)
            have = 1
            break
    return int(leaves), int(nodes), int(min_depth), int(min_mask), int(max_depth), int(max_mask), bool(stopped)
