# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled canonical-labeling kernel.

Same search as the pure-Python backend in ``_canon_py``: block-respecting
lex-minimal adjacency string with champion truncation, collecting every
minimizing labeling to detect odd automorphisms.  Rows are packed into
64-bit integers (slot t at bit 63 - t).
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memset


cdef struct SearchState:
    int n
    int n_labelings
    int cap_labelings
    unsigned long long *slotmask   # per old vertex
    unsigned long long *best_rows
    unsigned char *best_defined
    int *assigned                  # slot -> old vertex
    unsigned char *used
    unsigned char *is_ext
    int *neigh_flat                # neighbor lists, flattened
    int *neigh_start               # offsets, length n+1
    int *cand_flat                 # candidate lists per slot, flattened
    int *cand_start                # offsets, length n+1
    int *labelings                 # collected minimal labelings, n ints each


cdef void _descend(SearchState *st, int s):
    cdef int n = st.n
    cdef int i, v, u, t, idx
    cdef unsigned long long new_row, bit
    if s == n:
        if st.n_labelings < st.cap_labelings:
            for i in range(n):
                st.labelings[st.n_labelings * n + i] = st.assigned[i]
            st.n_labelings += 1
        return
    for idx in range(st.cand_start[s], st.cand_start[s + 1]):
        v = st.cand_flat[idx]
        if st.used[v]:
            continue
        new_row = st.slotmask[v]
        if st.best_defined[s] and new_row > st.best_rows[s]:
            continue
        if (not st.best_defined[s]) or new_row < st.best_rows[s]:
            st.best_rows[s] = new_row
            st.best_defined[s] = 1
            for t in range(s + 1, n):
                st.best_defined[t] = 0
            st.n_labelings = 0
        st.assigned[s] = v
        st.used[v] = 1
        bit = (<unsigned long long>1) << (63 - s)
        for i in range(st.neigh_start[v], st.neigh_start[v + 1]):
            st.slotmask[st.neigh_flat[i]] |= bit
        _descend(st, s + 1)
        bit = ~bit
        for i in range(st.neigh_start[v], st.neigh_start[v + 1]):
            st.slotmask[st.neigh_flat[i]] &= bit
        st.used[v] = 0
        st.assigned[s] = -1


def refine_colors(n, ext, neighbors):
    """Same refinement as the pure backend (not a hot path)."""
    colors = []
    for v in range(n):
        if ext[v]:
            colors.append((0, v))
        else:
            colors.append((1, len(neighbors[v])))
    palette = sorted(set(colors))
    colors = [palette.index(c) for c in colors]
    while True:
        sigs = []
        for v in range(n):
            neigh = sorted(colors[u] for u in neighbors[v])
            sigs.append((colors[v], tuple(neigh)))
        palette = sorted(set(sigs))
        new = [palette.index(s) for s in sigs]
        if len(palette) == len(set(colors)):
            return new
        colors = new


def canonical_form(n, ext, edges):
    """Returns (canonical_edges, sign) with canonical_edges a sorted
    tuple of vertex pairs, or (None, 0) when the class is zero.
    """
    cdef int nn = n
    if nn > 64:
        raise ValueError("canonical search supports at most 64 vertices")
    pairs = [(u, v) if u < v else (v, u) for u, v in edges]
    if len(set(pairs)) < len(pairs):
        return None, 0

    neighbors = [[] for _ in range(nn)]
    for u, v in pairs:
        neighbors[u].append(v)
        neighbors[v].append(u)

    colors = refine_colors(nn, ext, neighbors)

    internal = sorted(v for v in range(nn) if not ext[v])
    by_color = {}
    for v in internal:
        by_color.setdefault(colors[v], []).append(v)
    slot_candidates = {}
    pos = 0
    for color in sorted(by_color):
        members = by_color[color]
        for _ in members:
            slot_candidates[internal[pos]] = members
            pos += 1

    # worst-case number of minimal labelings is the automorphism group
    # order; cap generously and fail loudly if exceeded
    cdef int cap = 20000
    cdef SearchState st
    st.n = nn
    st.n_labelings = 0
    st.cap_labelings = cap
    st.slotmask = <unsigned long long*>malloc(nn * sizeof(unsigned long long))
    st.best_rows = <unsigned long long*>malloc(nn * sizeof(unsigned long long))
    st.best_defined = <unsigned char*>malloc(nn)
    st.assigned = <int*>malloc(nn * sizeof(int))
    st.used = <unsigned char*>malloc(nn)
    st.is_ext = <unsigned char*>malloc(nn)
    total_neigh = sum(len(ns) for ns in neighbors)
    st.neigh_flat = <int*>malloc(max(total_neigh, 1) * sizeof(int))
    st.neigh_start = <int*>malloc((nn + 1) * sizeof(int))
    cand_lists = []
    for s in range(nn):
        cand_lists.append([s] if ext[s] else slot_candidates[s])
    total_cand = sum(len(c) for c in cand_lists)
    st.cand_flat = <int*>malloc(max(total_cand, 1) * sizeof(int))
    st.cand_start = <int*>malloc((nn + 1) * sizeof(int))
    st.labelings = <int*>malloc(cap * nn * sizeof(int))

    cdef int i, s2, off
    try:
        memset(st.slotmask, 0, nn * sizeof(unsigned long long))
        memset(st.best_defined, 0, nn)
        memset(st.used, 0, nn)
        for i in range(nn):
            st.assigned[i] = -1
            st.is_ext[i] = 1 if ext[i] else 0
        off = 0
        for i in range(nn):
            st.neigh_start[i] = off
            for u in neighbors[i]:
                st.neigh_flat[off] = u
                off += 1
        st.neigh_start[nn] = off
        off = 0
        for i in range(nn):
            st.cand_start[i] = off
            for u in cand_lists[i]:
                st.cand_flat[off] = u
                off += 1
        st.cand_start[nn] = off

        _descend(&st, 0)
        if st.n_labelings >= cap:
            raise RuntimeError("automorphism collection overflow")

        canon_edges = []
        for s2 in range(nn):
            row = st.best_rows[s2] if st.best_defined[s2] else 0
            for t in range(s2):
                if row & ((<unsigned long long>1) << (63 - t)):
                    canon_edges.append((t, s2))
        canon_tuple = tuple(sorted(canon_edges))

        sign = 0
        perm = [0] * nn
        m = len(pairs)
        for li in range(st.n_labelings):
            for i in range(nn):
                perm[st.labelings[li * nn + i]] = i
            mapped = []
            for u, v in pairs:
                a, b = perm[u], perm[v]
                mapped.append((a, b) if a < b else (b, a))
            inv = 0
            for i in range(m):
                pi = mapped[i]
                for j in range(i + 1, m):
                    if pi > mapped[j]:
                        inv += 1
            parity = -1 if inv % 2 else 1
            if sign == 0:
                sign = parity
            elif sign != parity:
                return None, 0
        return canon_tuple, sign
    finally:
        free(st.slotmask)
        free(st.best_rows)
        free(st.best_defined)
        free(st.assigned)
        free(st.used)
        free(st.is_ext)
        free(st.neigh_flat)
        free(st.neigh_start)
        free(st.cand_flat)
        free(st.cand_start)
        free(st.labelings)
