"""Hot inner loops.

Every kernel exists twice where a vectorised form is natural: a numba
version (``*_numba``) and a pure numpy version (``*_numpy``).  The public
names (``triangles``, ``max_cut``, ``ore_ryser_violated``) dispatch on
:data:`tuza._jit.USE_NUMBA`.  The branch-and-bound searches have no useful
vectorised form; they are plain Python compiled by numba when enabled and
interpreted otherwise (``.py_func`` always reaches the interpreted body).
"""
from __future__ import annotations

import numpy as np

from ._jit import USE_NUMBA, njit

_CHUNK = 1 << 15


# --------------------------------------------------------------- triangles


@njit
def triangles_numba(adj):
    n = adj.shape[0]
    count = 0
    for u in range(n):
        for v in range(u + 1, n):
            if adj[u, v]:
                for w in range(v + 1, n):
                    if adj[u, w] and adj[v, w]:
                        count += 1
    out = np.empty((count, 3), dtype=np.int64)
    k = 0
    for u in range(n):
        for v in range(u + 1, n):
            if adj[u, v]:
                for w in range(v + 1, n):
                    if adj[u, w] and adj[v, w]:
                        out[k, 0] = u
                        out[k, 1] = v
                        out[k, 2] = w
                        k += 1
    return out


def triangles_numpy(adj):
    a = np.asarray(adj, dtype=bool)
    n = a.shape[0]
    if n < 3:
        return np.empty((0, 3), dtype=np.int64)
    cube = a[:, :, None] & a[:, None, :] & a[None, :, :]
    idx = np.argwhere(cube)
    keep = (idx[:, 0] < idx[:, 1]) & (idx[:, 1] < idx[:, 2])
    return idx[keep].astype(np.int64)


def triangles(adj):
    """Rows ``(u, v, w)`` with ``u < v < w``, lexicographically sorted."""
    adj = np.ascontiguousarray(adj, dtype=np.uint8)
    if USE_NUMBA:
        return triangles_numba(adj)
    return triangles_numpy(adj)


# ----------------------------------------------------------------- max cut


@njit
def max_cut_numba(n, eu, ev):
    # Gray-code walk over sides of vertices 0..n-2; vertex n-1 stays on side 0.
    if n <= 1:
        return 0, 0
    m = eu.shape[0]
    deg = np.zeros(n, dtype=np.int64)
    for i in range(m):
        deg[eu[i]] += 1
        deg[ev[i]] += 1
    ptr = np.zeros(n + 1, dtype=np.int64)
    for v in range(n):
        ptr[v + 1] = ptr[v] + deg[v]
    nbr = np.empty(2 * m, dtype=np.int64)
    fill = ptr[:-1].copy()
    for i in range(m):
        nbr[fill[eu[i]]] = ev[i]
        fill[eu[i]] += 1
        nbr[fill[ev[i]]] = eu[i]
        fill[ev[i]] += 1
    side = np.zeros(n, dtype=np.int64)
    cut = 0
    best = 0
    best_mask = 0
    mask = 0
    total = np.int64(1) << (n - 1)
    for step in range(1, total):
        # bit to flip is the lowest set bit of step
        v = 0
        s = step
        while (s & 1) == 0:
            s >>= 1
            v += 1
        delta = 0
        for p in range(ptr[v], ptr[v + 1]):
            if side[nbr[p]] == side[v]:
                delta += 1
            else:
                delta -= 1
        side[v] = 1 - side[v]
        cut += delta
        mask ^= np.int64(1) << v
        if cut > best:
            best = cut
            best_mask = mask
    return best, best_mask


def max_cut_numpy(n, eu, ev):
    if n <= 1:
        return 0, 0
    eu = np.asarray(eu, dtype=np.int64)
    ev = np.asarray(ev, dtype=np.int64)
    shifts = np.arange(n - 1, dtype=np.int64)
    total = 1 << (n - 1)
    best, best_mask = -1, 0
    for start in range(0, total, _CHUNK):
        masks = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        bits = ((masks[:, None] >> shifts) & 1).astype(np.int8)
        bits = np.concatenate([bits, np.zeros((len(masks), 1), np.int8)], axis=1)
        cuts = (bits[:, eu] ^ bits[:, ev]).sum(axis=1)
        j = int(np.argmax(cuts))
        if cuts[j] > best:
            best, best_mask = int(cuts[j]), int(masks[j])
    return best, best_mask


def max_cut(n, eu, ev):
    """Exact maximum cut; returns ``(value, mask)`` with bit ``v`` = side of ``v``."""
    eu = np.ascontiguousarray(eu, dtype=np.int64)
    ev = np.ascontiguousarray(ev, dtype=np.int64)
    if USE_NUMBA:
        value, mask = max_cut_numba(n, eu, ev)
        return int(value), int(mask)
    return max_cut_numpy(n, eu, ev)


# ------------------------------------------------------------- Ore-Ryser


@njit
def ore_ryser_violated_numba(f_c, f_d, adj_cd):
    # True iff some nonempty D' breaks f(D') <= sum_y min(f(y), |N(y) & D'|).
    c = f_c.shape[0]
    d = f_d.shape[0]
    cnt = np.zeros(c, dtype=np.int64)
    lhs = 0
    total = np.int64(1) << d
    for step in range(1, total):
        j = 0
        s = step
        while (s & 1) == 0:
            s >>= 1
            j += 1
        gray = step ^ (step >> 1)
        if (gray >> j) & 1:
            sign = 1
        else:
            sign = -1
        lhs += sign * f_d[j]
        for y in range(c):
            if adj_cd[y, j]:
                cnt[y] += sign
        rhs = 0
        for y in range(c):
            rhs += min(f_c[y], cnt[y])
        if lhs > rhs:
            return True
    return False


def ore_ryser_violated_numpy(f_c, f_d, adj_cd):
    f_c = np.asarray(f_c, dtype=np.int64)
    f_d = np.asarray(f_d, dtype=np.int64)
    a = np.asarray(adj_cd, dtype=np.int64)
    d = f_d.shape[0]
    shifts = np.arange(d, dtype=np.int64)
    total = 1 << d
    for start in range(1, total, _CHUNK):
        masks = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        bits = (masks[:, None] >> shifts) & 1
        lhs = bits @ f_d
        rhs = np.minimum(bits @ a.T, f_c).sum(axis=1)
        if np.any(lhs > rhs):
            return True
    return False


def ore_ryser_violated(f_c, f_d, adj_cd):
    f_c = np.ascontiguousarray(f_c, dtype=np.int64)
    f_d = np.ascontiguousarray(f_d, dtype=np.int64)
    adj_cd = np.ascontiguousarray(adj_cd, dtype=np.uint8)
    if USE_NUMBA:
        return bool(ore_ryser_violated_numba(f_c, f_d, adj_cd))
    return ore_ryser_violated_numpy(f_c, f_d, adj_cd)


# --------------------------------------------------- minimum triangle hitting
#
# Edge state: 0 free, 1 in the hitting set, 2 protected (must stay out).
# ctr = [nodes, best_size, status]; status 1 = budget exhausted, 2 = best
# reached the root lower bound, so the search can stop.


@njit(cache=False)
def _hit_rec(tri_e, e_ptr, e_tri, state, hit, cost, best_state, ctr, budget,
             root_lb, used):
    ctr[0] += 1
    if ctr[0] > budget:
        ctr[2] = 1
        return
    n_tri = tri_e.shape[0]
    choose = -1
    choose_free = 4
    for t in range(n_tri):
        if hit[t] == 0:
            f = 0
            for j in range(3):
                if state[tri_e[t, j]] == 0:
                    f += 1
            if f == 0:
                return
            if f < choose_free:
                choose_free = f
                choose = t
    if choose < 0:
        if cost < ctr[1]:
            ctr[1] = cost
            for e in range(state.shape[0]):
                best_state[e] = 1 if state[e] == 1 else 0
            if cost <= root_lb:
                ctr[2] = 2
        return
    # greedy packing of unhit triangles, disjoint on their free edges
    for e in range(used.shape[0]):
        used[e] = 0
    lb = 0
    for want in range(1, 4):
        for t in range(n_tri):
            if hit[t] != 0:
                continue
            f = 0
            clash = False
            for j in range(3):
                e = tri_e[t, j]
                if state[e] == 0:
                    f += 1
                    if used[e]:
                        clash = True
            if f == want and not clash:
                for j in range(3):
                    e = tri_e[t, j]
                    if state[e] == 0:
                        used[e] = 1
                lb += 1
    if cost + lb >= ctr[1]:
        return
    free = np.empty(3, dtype=np.int64)
    nf = 0
    for j in range(3):
        e = tri_e[choose, j]
        if state[e] == 0:
            free[nf] = e
            nf += 1
    for i in range(nf):
        e = free[i]
        state[e] = 1
        for p in range(e_ptr[e], e_ptr[e + 1]):
            hit[e_tri[p]] += 1
        _hit_rec(tri_e, e_ptr, e_tri, state, hit, cost + 1, best_state, ctr,
                 budget, root_lb, used)
        for p in range(e_ptr[e], e_ptr[e + 1]):
            hit[e_tri[p]] -= 1
        state[e] = 2
        if ctr[2] != 0:
            break
    for i in range(nf):
        state[free[i]] = 0


@njit(cache=False)
def min_hitting_search(tri_e, e_ptr, e_tri, n_edges, incumbent, root_lb, budget):
    """Search for a hitting set smaller than ``incumbent``.

    Returns ``(size, edge_mask, nodes, status)``; ``edge_mask`` is meaningful
    only when ``size < incumbent``.
    """
    state = np.zeros(n_edges, dtype=np.int8)
    hit = np.zeros(tri_e.shape[0], dtype=np.int64)
    best_state = np.zeros(n_edges, dtype=np.int8)
    used = np.zeros(n_edges, dtype=np.int8)
    ctr = np.zeros(3, dtype=np.int64)
    ctr[1] = incumbent
    _hit_rec(tri_e, e_ptr, e_tri, state, hit, 0, best_state, ctr, budget,
             root_lb, used)
    return ctr[1], best_state, ctr[0], ctr[2]


# --------------------------------------------------- maximum triangle packing
#
# Edge state: 0 free, 1 used by a packed triangle, 2 excluded from all.


@njit(cache=False)
def _pack_rec(tri_e, e_ptr, e_tri, eu, ev, n_vertices, state, chosen, depth,
              best_chosen, ctr, budget, root_ub, avail_e, vdeg):
    ctr[0] += 1
    if ctr[0] > budget:
        ctr[2] = 1
        return
    n_edges = state.shape[0]
    first = -1
    for v in range(n_vertices):
        vdeg[v] = 0
    for e in range(n_edges):
        avail_e[e] = 0
        if state[e] != 0:
            continue
        for p in range(e_ptr[e], e_ptr[e + 1]):
            t = e_tri[p]
            if (state[tri_e[t, 0]] == 0 and state[tri_e[t, 1]] == 0
                    and state[tri_e[t, 2]] == 0):
                avail_e[e] = 1
                break
        if avail_e[e]:
            vdeg[eu[e]] += 1
            vdeg[ev[e]] += 1
            if first < 0:
                first = e
    if first < 0:
        if depth > ctr[1]:
            ctr[1] = depth
            for i in range(depth):
                best_chosen[i] = chosen[i]
            if depth >= root_ub:
                ctr[2] = 2
        return
    half = 0
    for v in range(n_vertices):
        half += vdeg[v] // 2
    if depth + half // 3 <= ctr[1]:
        return
    for p in range(e_ptr[first], e_ptr[first + 1]):
        t = e_tri[p]
        if (state[tri_e[t, 0]] == 0 and state[tri_e[t, 1]] == 0
                and state[tri_e[t, 2]] == 0):
            for j in range(3):
                state[tri_e[t, j]] = 1
            chosen[depth] = t
            _pack_rec(tri_e, e_ptr, e_tri, eu, ev, n_vertices, state, chosen,
                      depth + 1, best_chosen, ctr, budget, root_ub, avail_e, vdeg)
            for j in range(3):
                state[tri_e[t, j]] = 0
            if ctr[2] != 0:
                return
    state[first] = 2
    _pack_rec(tri_e, e_ptr, e_tri, eu, ev, n_vertices, state, chosen, depth,
              best_chosen, ctr, budget, root_ub, avail_e, vdeg)
    state[first] = 0


@njit(cache=False)
def max_packing_search(tri_e, e_ptr, e_tri, eu, ev, n_vertices, incumbent,
                       root_ub, budget):
    """Search for a packing larger than ``incumbent``.

    Returns ``(size, chosen_triangles, nodes, status)``.
    """
    n_edges = eu.shape[0]
    state = np.zeros(n_edges, dtype=np.int8)
    chosen = np.zeros(n_edges // 3 + 1, dtype=np.int64)
    best_chosen = np.zeros(n_edges // 3 + 1, dtype=np.int64)
    avail_e = np.zeros(n_edges, dtype=np.int8)
    vdeg = np.zeros(max(n_vertices, 1), dtype=np.int64)
    ctr = np.zeros(3, dtype=np.int64)
    ctr[1] = incumbent
    _pack_rec(tri_e, e_ptr, e_tri, eu, ev, n_vertices, state, chosen, 0,
              best_chosen, ctr, budget, root_ub, avail_e, vdeg)
    return ctr[1], best_chosen, ctr[0], ctr[2]


# ------------------------------------------------- edge-colouring backtrack


@njit
def edge_color_search(eu, ev, n_vertices, k, budget):
    """Proper ``k``-edge-colouring of the edges in the given order.

    Returns ``(status, colors, nodes)`` with status 1 found, 0 none exists,
    -1 budget exhausted.  Colours are canonical: edge ``i`` never opens a
    colour above ``1 + max(colors[:i])``.
    """
    m = eu.shape[0]
    colors = np.full(m, -1, dtype=np.int64)
    used = np.zeros((max(n_vertices, 1), max(k, 1)), dtype=np.int8)
    top = np.full(m + 1, -1, dtype=np.int64)
    nodes = 0
    i = 0
    while 0 <= i < m:
        nodes += 1
        if nodes > budget:
            return -1, colors, nodes
        u = eu[i]
        v = ev[i]
        c = colors[i]
        if c >= 0:
            used[u, c] = 0
            used[v, c] = 0
        limit = min(k - 1, top[i] + 1)
        c += 1
        while c <= limit and (used[u, c] or used[v, c]):
            c += 1
        if c <= limit:
            colors[i] = c
            used[u, c] = 1
            used[v, c] = 1
            top[i + 1] = max(top[i], c)
            i += 1
        else:
            colors[i] = -1
            i -= 1
    if i == m:
        return 1, colors, nodes
    return 0, colors, nodes
