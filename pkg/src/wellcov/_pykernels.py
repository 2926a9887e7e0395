"""Pure-Python reference versions of the hot kernels.

Every function here has a twin in ``_ckernels.pyx`` with the same signature
and the same output, including tie-breaking and emission order.  Graphs are
passed as adjacency bitmasks.
"""
from __future__ import annotations

import numpy as np

from .errors import OracleBudgetExceeded

LOW_BITS = 16


def _pivot(p: int, x: int, closed) -> int:
    best = -1
    best_count = 1 << 30
    cand = p | x
    while cand:
        low = cand & -cand
        u = low.bit_length() - 1
        c = (p & closed[u]).bit_count()
        if c < best_count:
            best, best_count = u, c
            if c == 0:
                break
        cand ^= low
    return best


def iter_mis(adj):
    """Maximal independent sets as bitmasks (Bron-Kerbosch with pivoting on the complement)."""
    n = len(adj)
    closed = [adj[v] | (1 << v) for v in range(n)]
    stack = [[0, (1 << n) - 1, 0, -1]]
    while stack:
        frame = stack[-1]
        r, p, x, todo = frame
        if todo < 0:
            if not p:
                stack.pop()
                if not x:
                    yield r
                continue
            todo = p & closed[_pivot(p, x, closed)]
        if not todo:
            stack.pop()
            continue
        low = todo & -todo
        v = low.bit_length() - 1
        frame[1] = p & ~low
        frame[2] = x | low
        frame[3] = todo ^ low
        keep = ~closed[v]
        stack.append([r | low, p & keep, x & keep, -1])


def mis_all(adj, budget: int) -> list[int]:
    out = []
    for m in iter_mis(adj):
        out.append(m)
        if len(out) > budget:
            raise OracleBudgetExceeded(f"more than {budget} maximal independent sets")
    return out


def mis_extremes(adj, budget: int) -> tuple[int, int, int, int, int]:
    """``(count, min_size, min_mask, max_size, max_mask)``; first occurrence wins ties."""
    count = 0
    lo_size, lo_mask, hi_size, hi_mask = 1 << 30, 0, -1, 0
    for m in iter_mis(adj):
        count += 1
        if count > budget:
            raise OracleBudgetExceeded(f"more than {budget} maximal independent sets")
        s = m.bit_count()
        if s < lo_size:
            lo_size, lo_mask = s, m
        if s > hi_size:
            hi_size, hi_mask = s, m
    return count, lo_size, lo_mask, hi_size, hi_mask


# ------------------------------------------------------------ partition scan

def _subset_tables(adj_c, bits: int, offset: int):
    """OR of neighbour masks, independence flag and popcount for every subset of ``bits`` bits."""
    size = 1 << bits
    h = np.zeros(size, dtype=np.int64)
    ind = np.ones(size, dtype=bool)
    pc = np.zeros(size, dtype=np.int64)
    for i in range(bits):
        a = adj_c[offset + i]
        half = 1 << i
        h[half:2 * half] = h[:half] | a
        # adding vertex i keeps the set independent iff it has no neighbour among lower bits
        ind[half:2 * half] = ind[:half] & ((np.arange(half, dtype=np.int64) << offset) & a == 0)
        pc[half:2 * half] = pc[:half] + 1
    return h, ind, pc


def partition_scan(adj_c, types, stop_on_change: bool = False, collect: bool = False):
    """Scan all subsets ``B`` of a ``k``-vertex cover in binary-counter order.

    ``adj_c[i]`` is the mask (over cover indices) of cover vertices adjacent to
    cover vertex ``i``; ``types`` holds, for every vertex outside the cover,
    the mask of its cover neighbours.  For each ``B`` the candidate
    ``A | (N(B) - B)`` is tested for being a minimal vertex cover.

    Returns ``(processed, n_valid, min_size, min_b, max_size, max_b, valid)``
    where ``valid`` lists the accepted ``B`` masks when ``collect`` is set.
    With ``stop_on_change`` the scan stops right after the first accepted
    ``B`` whose candidate size differs from the first accepted size.
    """
    k = len(adj_c)
    full = (1 << k) - 1
    n_out = len(types)
    total = 1 << k
    f = np.zeros(total, dtype=np.int64)
    t = np.asarray(list(types), dtype=np.int64)
    if len(t):
        np.bitwise_or.at(f, t, t)
        g = np.bincount(t, minlength=total).astype(np.int64)
    else:
        g = np.zeros(total, dtype=np.int64)
    for i in range(k):
        fv = f.reshape(-1, 2, 1 << i)
        fv[:, 1, :] |= fv[:, 0, :]
        gv = g.reshape(-1, 2, 1 << i)
        gv[:, 1, :] += gv[:, 0, :]

    lo_bits = min(k, LOW_BITS)
    hi_bits = k - lo_bits
    h_lo, ind_lo, pc_lo = _subset_tables(adj_c, lo_bits, 0)
    h_hi, ind_hi, pc_hi = _subset_tables(adj_c, hi_bits, lo_bits)
    lo = np.arange(1 << lo_bits, dtype=np.int64)
    lo_mask = (1 << lo_bits) - 1

    processed = 0
    n_valid = 0
    min_size = max_size = -1
    min_b = max_b = -1
    base = None
    valid_out = [] if collect else None
    for hi in range(1 << hi_bits):
        hh = int(h_hi[hi])
        b = (hi << lo_bits) | lo
        a = full ^ b
        hb = h_lo | hh
        ok = ind_lo & bool(ind_hi[hi]) & ((hh & lo_mask & lo) == 0)
        ok &= (a & ~(hb | f[a])) == 0
        sizes = (k - pc_lo - int(pc_hi[hi])) + n_out - g[a]
        idx = np.flatnonzero(ok)
        stop_at = None
        if len(idx):
            if base is None:
                base = int(sizes[idx[0]])
            if stop_on_change:
                diff = idx[sizes[idx] != base]
                if len(diff):
                    stop_at = int(diff[0])
                    idx = idx[idx <= stop_at]
        if len(idx):
            vs = sizes[idx]
            n_valid += len(idx)
            j = int(np.argmin(vs))
            if min_b < 0 or vs[j] < min_size:
                min_size, min_b = int(vs[j]), int(b[idx[j]])
            j = int(np.argmax(vs))
            if max_b < 0 or vs[j] > max_size:
                max_size, max_b = int(vs[j]), int(b[idx[j]])
            if collect:
                valid_out.extend(int(x) for x in b[idx])
        if stop_at is not None:
            processed += stop_at + 1
            break
        processed += 1 << lo_bits
    return processed, n_valid, min_size, min_b, max_size, max_b, valid_out


# ------------------------------------------------------------ degeneracy tree

def degen_search(adj, early_exit: bool = True):
    """Search tree branching on the closed neighbourhood of a minimum-degree vertex.

    Returns ``(leaves, nodes, min_depth, min_mask, max_depth, max_mask, stopped)``.
    Runs of isolated residual vertices (single-child chains) are committed in
    one step; the node count still includes every chain node.
    """
    n = len(adj)
    closed = [adj[v] | (1 << v) for v in range(n)]
    leaves = 0
    nodes = 1
    min_depth = max_depth = -1
    min_mask = max_mask = 0
    first_depth = -1

    def settle(r, chosen, depth):
        # commit isolated residual vertices, then pick the branching vertex
        nonlocal nodes
        best_v, best_d = -1, 1 << 30
        iso = 0
        rest = r
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            d = (adj[v] & r).bit_count()
            if d == 0:
                iso |= low
            elif d < best_d:
                best_v, best_d = v, d
            rest ^= low
        if iso:
            c = iso.bit_count()
            nodes += c
            r &= ~iso
            chosen |= iso
            depth += c
        return r, chosen, depth, best_v

    stack = []
    r, chosen, depth, v = settle((1 << n) - 1, 0, 0)
    stopped = False
    pending = [(r, chosen, depth, v)]
    while pending:
        r, chosen, depth, v = pending.pop()
        if r == 0:
            leaves += 1
            if min_depth < 0 or depth < min_depth:
                min_depth, min_mask = depth, chosen
            if depth > max_depth:
                max_depth, max_mask = depth, chosen
            if first_depth < 0:
                first_depth = depth
            elif early_exit and depth != first_depth:
                stopped = True
                break
        else:
            stack.append([r, chosen, depth, closed[v] & r])
        while stack and not pending:
            frame = stack[-1]
            todo = frame[3]
            if not todo:
                stack.pop()
                continue
            low = todo & -todo
            frame[3] = todo ^ low
            u = low.bit_length() - 1
            nodes += 1
            pending.append(settle(frame[0] & ~closed[u], frame[1] | low, frame[2] + 1))
    return leaves, nodes, min_depth, min_mask, max_depth, max_mask, stopped
