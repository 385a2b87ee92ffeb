# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled twins of the kernels in ``_pykernels``; same signatures, same results."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset
from libcpp.queue cimport priority_queue
from libcpp.pair cimport pair

BACKEND = "cython"


def closed_walk_girths(int n, const int[:] offsets, const int[:] targets,
                       const int[:] costs, const int[:] shifts):
    cdef int nst = 4 * n
    cdef int *dist = <int *> malloc(max(nst, 1) * sizeof(int))
    cdef int *queue = <int *> malloc(max(nst, 1) * sizeof(int))
    cdef int best[4]
    cdef int s, a, st, v, mask, nxt, head, tail, d, t
    cdef bint unit = True
    cdef priority_queue[pair[int, int]] heap
    cdef pair[int, int] item
    for t in range(4):
        best[t] = -1
    for a in range(costs.shape[0]):
        if costs[a] != 1:
            unit = False
            break
    try:
        for s in range(n):
            for st in range(nst):
                dist[st] = -1
            if unit:
                head = 0
                tail = 0
                for a in range(offsets[s], offsets[s + 1]):
                    st = targets[a] * 4 + shifts[a]
                    if dist[st] < 0:
                        dist[st] = 1
                        queue[tail] = st
                        tail += 1
                while head < tail:
                    st = queue[head]
                    head += 1
                    v = st >> 2
                    mask = st & 3
                    for a in range(offsets[v], offsets[v + 1]):
                        nxt = targets[a] * 4 + (mask ^ shifts[a])
                        if dist[nxt] < 0:
                            dist[nxt] = dist[st] + 1
                            queue[tail] = nxt
                            tail += 1
            else:
                for a in range(offsets[s], offsets[s + 1]):
                    # min-heap through negated keys
                    heap.push(pair[int, int](-costs[a], targets[a] * 4 + shifts[a]))
                while not heap.empty():
                    item = heap.top()
                    heap.pop()
                    st = item.second
                    if dist[st] >= 0:
                        continue
                    d = -item.first
                    dist[st] = d
                    v = st >> 2
                    mask = st & 3
                    for a in range(offsets[v], offsets[v + 1]):
                        nxt = targets[a] * 4 + (mask ^ shifts[a])
                        if dist[nxt] < 0:
                            heap.push(pair[int, int](-(d + costs[a]), nxt))
            for t in range(4):
                d = dist[4 * s + t]
                if d >= 0 and (best[t] < 0 or d < best[t]):
                    best[t] = d
    finally:
        free(dist)
        free(queue)
    return [best[0], best[1], best[2], best[3]]


def layered_bfs(int n, const int[:] offsets, const int[:] targets,
                const int[:] shifts, int nstates, int src):
    cdef int total = n * nstates
    cdef int *queue = <int *> malloc(max(total, 1) * sizeof(int))
    cdef int head = 0, tail = 0, st, v, mask, nxt, a
    dist = [-1] * total
    cdef int *d = <int *> malloc(max(total, 1) * sizeof(int))
    try:
        for st in range(total):
            d[st] = -1
        d[src * nstates] = 0
        queue[tail] = src * nstates
        tail += 1
        while head < tail:
            st = queue[head]
            head += 1
            v = st // nstates
            mask = st % nstates
            for a in range(offsets[v], offsets[v + 1]):
                nxt = targets[a] * nstates + (mask ^ shifts[a])
                if d[nxt] < 0:
                    d[nxt] = d[st] + 1
                    queue[tail] = nxt
                    tail += 1
        for st in range(total):
            dist[st] = d[st]
    finally:
        free(queue)
        free(d)
    return dist


cdef void _extend(int v, int depth, int parity, int last_edge, int src, int length,
                  const int[:] offsets, const int[:] targets, const int[:] signs,
                  const int[:] edge_ids, const int[:] dist, char *on_path,
                  int *path, char *flags) noexcept nogil:
    cdef int a, w, k
    for a in range(offsets[v], offsets[v + 1]):
        w = targets[a]
        if w == src:
            if depth + 1 == length and edge_ids[a] != last_edge and (parity ^ signs[a]):
                for k in range(depth + 1):
                    flags[path[k]] = 1
            continue
        if on_path[w] or depth + 1 + dist[w] > length or depth + 1 >= length:
            continue
        on_path[w] = 1
        path[depth + 1] = w
        _extend(w, depth + 1, parity ^ signs[a], edge_ids[a], src, length,
                offsets, targets, signs, edge_ids, dist, on_path, path, flags)
        on_path[w] = 0


def negative_cycle_partners(int n, const int[:] offsets, const int[:] targets,
                            const int[:] signs, const int[:] edge_ids, int src,
                            int length, const int[:] dist):
    cdef char *on_path = <char *> malloc(max(n, 1))
    cdef char *flags = <char *> malloc(max(n, 1))
    cdef int *path = <int *> malloc((length + 2) * sizeof(int))
    cdef int i
    try:
        memset(on_path, 0, max(n, 1))
        memset(flags, 0, max(n, 1))
        on_path[src] = 1
        path[0] = src
        with nogil:
            _extend(src, 0, 0, -1, src, length, offsets, targets, signs,
                    edge_ids, dist, on_path, path, flags)
        result = [flags[i] for i in range(n)]
    finally:
        free(on_path)
        free(flags)
        free(path)
    return result


def hom_search(order, const int[:] back_ptr, const int[:] back_pos,
               const int[:] back_sign, const int[:] loop_need, int nt,
               const int[:] tgt_mask):
    cdef int ns = len(order)
    if ns == 0:
        return [], []
    cdef int *images = <int *> malloc(ns * sizeof(int))
    cdef int *bits = <int *> malloc(ns * sizeof(int))
    cdef int *cand = <int *> malloc(ns * sizeof(int))
    cdef int top = 2 * nt
    cdef int i = 0, c, t, b, need, k, end, j, bit, step
    cdef bint is_root, ok, placed, found = False
    try:
        for i in range(ns):
            images[i] = -1
            bits[i] = 0
            cand[i] = -1
        i = 0
        with nogil:
            while i >= 0:
                is_root = back_ptr[i] == back_ptr[i + 1]
                c = cand[i] + 1
                step = 2 if is_root else 1
                if is_root and c % 2:
                    c += 1
                placed = False
                while c < top:
                    t = c >> 1
                    b = c & 1
                    need = loop_need[i]
                    ok = (tgt_mask[t * nt + t] & need) == need
                    k = back_ptr[i]
                    end = back_ptr[i + 1]
                    while ok and k < end:
                        j = back_pos[k]
                        bit = back_sign[k] ^ b ^ bits[j]
                        if not (tgt_mask[t * nt + images[j]] & (1 << bit)):
                            ok = False
                        k += 1
                    if ok:
                        cand[i] = c
                        images[i] = t
                        bits[i] = b
                        placed = True
                        break
                    c += step
                if placed:
                    i += 1
                    if i == ns:
                        found = True
                        break
                else:
                    cand[i] = -1
                    images[i] = -1
                    i -= 1
        if not found:
            return None
        return [images[k] for k in range(ns)], [bits[k] for k in range(ns)]
    finally:
        free(images)
        free(bits)
        free(cand)
