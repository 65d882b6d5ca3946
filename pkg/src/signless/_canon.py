"""Numba kernels for canonical labeling and canonical-augmentation growth.

Graphs here are plain ``int64`` arrays of adjacency bitsets (bit ``j`` of
row ``i`` marks the edge ``{i, j}``).  A *certificate* packs the
upper-triangle bits of a labeled graph in graph6 order
``x(0,1), x(0,2), x(1,2), x(0,3), ...`` with the first pair as the most
significant bit, so integer order equals lexicographic order of the bit
string.  With ``n <= 10`` there are at most 45 pairs and the certificate
fits one word.

The canonical labeling is individualization-refinement: colour refinement
to an equitable ordered partition, then a depth-first search over
individualized vertices of the first smallest non-singleton cell.  The
least certificate over all leaves wins.  Automorphisms found when two
leaves agree are used twice: to jump back to the common ancestor of the
two leaves, and to skip candidates lying in an orbit already explored at
a node (only generators fixing that node's prefix are used).
"""

import numpy as np
from numba import njit

MAX_CANON_N = 10
_MAX_GENS = 64


@njit(cache=True)
def popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def certificate(adj, n, inv):
    """Pack the graph relabeled so that label ``i`` is vertex ``inv[i]``."""
    cert = np.int64(0)
    for j in range(1, n):
        rj = adj[inv[j]]
        for i in range(j):
            cert = (cert << 1) | ((rj >> inv[i]) & 1)
    return cert


@njit(cache=True)
def decode(cert, n):
    """Adjacency rows of the labeled graph packed in ``cert``."""
    adj = np.zeros(n, np.int64)
    npairs = n * (n - 1) // 2
    k = npairs - 1
    for j in range(1, n):
        for i in range(j):
            if (cert >> k) & 1:
                adj[i] |= np.int64(1) << j
                adj[j] |= np.int64(1) << i
            k -= 1
    return adj


@njit(cache=True)
def _refine(adj, n, color):
    """Colour refinement in place; returns the number of colours.

    Colours are ordered; a vertex's new colour is the rank of the key
    (old colour, neighbour counts per colour), so the ordering of existing
    cells is preserved and the result does not depend on vertex names.
    """
    c = 0
    for v in range(n):
        if color[v] + 1 > c:
            c = color[v] + 1
    keys = np.empty(n, np.int64)
    cnt = np.empty(n, np.int64)
    while c < n:
        for v in range(n):
            for j in range(c):
                cnt[j] = 0
            row = adj[v]
            for u in range(n):
                if (row >> u) & 1:
                    cnt[color[u]] += 1
            key = np.int64(color[v])
            for j in range(c):
                key = key * 16 + cnt[j]
            keys[v] = key
        srt = np.sort(keys)
        distinct = 1
        for i in range(1, n):
            if srt[i] != srt[i - 1]:
                distinct += 1
        if distinct == c:
            break
        for v in range(n):
            r = 0
            for i in range(n):
                if i > 0 and srt[i] != srt[i - 1]:
                    r += 1
                if srt[i] == keys[v]:
                    break
            color[v] = r
        c = distinct
    return c


@njit(cache=True)
def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


@njit(cache=True)
def canonical_labeling(adj, n):
    """Return ``(cert, lab)`` where ``lab[v]`` is the canonical label of ``v``."""
    if n <= 1:
        return np.int64(0), np.zeros(n, np.int64)
    col = np.zeros((n + 1, n), np.int64)
    ncol = np.zeros(n + 1, np.int64)
    cand = np.zeros((n + 1, n), np.int64)
    ncand = np.zeros(n + 1, np.int64)
    idx = np.zeros(n + 1, np.int64)
    path = np.zeros(n + 1, np.int64)
    explored = np.zeros((n + 1, n), np.bool_)
    gens = np.zeros((_MAX_GENS, n), np.int64)
    ngens = 0
    sizes = np.zeros(n, np.int64)
    inv = np.zeros(n, np.int64)
    uf = np.zeros(n, np.int64)

    have_first = False
    first_cert = np.int64(0)
    first_lab = np.zeros(n, np.int64)
    first_path = np.zeros(n + 1, np.int64)
    first_depth = 0
    best_cert = np.int64(0)
    best_lab = np.zeros(n, np.int64)
    best_path = np.zeros(n + 1, np.int64)
    best_depth = 0

    ncol[0] = _refine(adj, n, col[0])
    d = 0
    fresh = True
    while True:
        if fresh:
            fresh = False
            if ncol[d] == n:
                # leaf
                for v in range(n):
                    inv[col[d, v]] = v
                cert = certificate(adj, n, inv)
                if not have_first:
                    have_first = True
                    first_cert = cert
                    best_cert = cert
                    first_depth = d
                    best_depth = d
                    for v in range(n):
                        first_lab[v] = col[d, v]
                        best_lab[v] = col[d, v]
                    for i in range(d):
                        first_path[i] = path[i]
                        best_path[i] = path[i]
                    if d == 0:
                        break
                    d -= 1
                    continue
                jump = -1
                if cert == first_cert or cert == best_cert:
                    if cert == first_cert:
                        ref_lab = first_lab
                        ref_path = first_path
                        ref_depth = first_depth
                    else:
                        ref_lab = best_lab
                        ref_path = best_path
                        ref_depth = best_depth
                    if ngens < _MAX_GENS:
                        for u in range(n):
                            gens[ngens, u] = inv[ref_lab[u]]
                        ngens += 1
                    a = 0
                    while a < d and a < ref_depth and path[a] == ref_path[a]:
                        a += 1
                    jump = a
                elif cert < best_cert:
                    best_cert = cert
                    best_depth = d
                    for v in range(n):
                        best_lab[v] = col[d, v]
                    for i in range(d):
                        best_path[i] = path[i]
                if jump >= 0:
                    d = jump
                else:
                    d -= 1
                continue
            # interior node: pick the first smallest non-singleton cell
            for i in range(ncol[d]):
                sizes[i] = 0
            for v in range(n):
                sizes[col[d, v]] += 1
            target = -1
            tsize = n + 1
            for i in range(ncol[d]):
                if sizes[i] > 1 and sizes[i] < tsize:
                    tsize = sizes[i]
                    target = i
            k = 0
            for v in range(n):
                if col[d, v] == target:
                    cand[d, k] = v
                    k += 1
                explored[d, v] = False
            ncand[d] = k
            idx[d] = 0
        if idx[d] >= ncand[d]:
            if d == 0:
                break
            d -= 1
            continue
        v = cand[d, idx[d]]
        idx[d] += 1
        if idx[d] > 1 and ngens > 0:
            for u in range(n):
                uf[u] = u
            for g in range(ngens):
                fixes = True
                for i in range(d):
                    if gens[g, path[i]] != path[i]:
                        fixes = False
                        break
                if fixes:
                    for u in range(n):
                        ru = _find(uf, u)
                        rw = _find(uf, gens[g, u])
                        if ru != rw:
                            uf[ru] = rw
            rv = _find(uf, v)
            skip = False
            for u in range(n):
                if explored[d, u] and _find(uf, u) == rv:
                    skip = True
                    break
            if skip:
                continue
        explored[d, v] = True
        path[d] = v
        # individualize v: it becomes the first cell of its old cell
        cv = col[d, v]
        for u in range(n):
            cu = col[d, u]
            if cu > cv or (cu == cv and u != v):
                col[d + 1, u] = cu + 1
            else:
                col[d + 1, u] = cu
        ncol[d + 1] = _refine(adj, n, col[d + 1])
        d += 1
        fresh = True
    return best_cert, best_lab


@njit(cache=True)
def canonical_cert(adj, n):
    cert, _ = canonical_labeling(adj, n)
    return cert


@njit(cache=True)
def is_connected_rows(adj, n):
    if n <= 1:
        return True
    full = (np.int64(1) << n) - 1
    seen = np.int64(1)
    frontier = np.int64(1)
    while frontier:
        nxt = np.int64(0)
        for v in range(n):
            if (frontier >> v) & 1:
                nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == full


@njit(cache=True)
def _deletion_key(adj, n, v):
    # cheap invariant used to pre-select the canonical deletion vertex
    deg = popcount(adj[v])
    s = 0
    row = adj[v]
    for u in range(n):
        if (row >> u) & 1:
            s += popcount(adj[u])
    return deg * 1024 + s


@njit(cache=True)
def extend_parent(parent_cert, np_, min_add, max_add):
    """Canonical children of one parent class with ``np_`` vertices.

    Every neighbourhood ``mask`` of the new vertex with
    ``min_add <= |mask| <= max_add`` is tried.  A child is kept when the
    canonical deletion vertex (largest canonical label among the vertices
    minimising ``_deletion_key``) leaves a graph isomorphic to the parent;
    siblings are deduplicated by certificate, first occurrence wins.
    Returns child certificates in mask order.
    """
    n = np_ + 1
    padj = decode(parent_cert, np_)
    child = np.zeros(n, np.int64)
    sub = np.zeros(np_, np.int64)
    out = np.empty(1 << np_, np.int64)
    nout = 0
    keys = np.empty(n, np.int64)
    for mask in range(1 << np_):
        pc = popcount(mask)
        if pc < min_add or pc > max_add:
            continue
        for i in range(np_):
            child[i] = padj[i] | (((mask >> i) & 1) << np_)
        child[np_] = mask
        kmin = np.int64(1) << 40
        for u in range(n):
            keys[u] = _deletion_key(child, n, u)
            if keys[u] < kmin:
                kmin = keys[u]
        if keys[np_] != kmin:
            continue
        cert, lab = canonical_labeling(child, n)
        w = -1
        for u in range(n):
            if keys[u] == kmin and (w < 0 or lab[u] > lab[w]):
                w = u
        if w != np_:
            # relabel child - w onto 0..np_-1 and compare with the parent
            k = 0
            for u in range(n):
                if u == w:
                    continue
                row = child[u]
                low = row & ((np.int64(1) << w) - 1)
                high = (row >> (w + 1)) << w
                sub[k] = low | high
                k += 1
            if canonical_cert(sub, np_) != parent_cert:
                continue
        dup = False
        for i in range(nout):
            if out[i] == cert:
                dup = True
                break
        if not dup:
            out[nout] = cert
            nout += 1
    return out[:nout]


@njit(cache=True)
def extend_level(parents, np_):
    """All classes on ``np_ + 1`` vertices from the full list on ``np_``."""
    total = 0
    chunks = []
    for p in range(parents.shape[0]):
        ch = extend_parent(parents[p], np_, 0, np_)
        chunks.append(ch)
        total += ch.shape[0]
    res = np.empty(total, np.int64)
    k = 0
    for ch in chunks:
        res[k:k + ch.shape[0]] = ch
        k += ch.shape[0]
    return res


@njit(cache=True)
def labeled_class_certs(n, connected_only):
    """Canonical certificates of every labeled graph on ``n`` vertices.

    Brute force over all ``2**(n(n-1)/2)`` edge subsets; the caller
    deduplicates.  Independent of the growth procedure above apart from
    the shared canonical labeling.
    """
    npairs = n * (n - 1) // 2
    total = np.int64(1) << npairs
    out = np.empty(total, np.int64)
    nout = 0
    for cert in range(total):
        adj = decode(np.int64(cert), n)
        if connected_only and not is_connected_rows(adj, n):
            continue
        out[nout] = canonical_cert(adj, n)
        nout += 1
    return out[:nout]
