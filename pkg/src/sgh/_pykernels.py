"""Pure-Python search kernels.

Every function here has a twin with the same signature in the compiled
``_ckernels`` extension. Graphs arrive as flat arc tables (CSR layout):
the arcs leaving vertex ``v`` are ``offsets[v]:offsets[v + 1]``. A loop
contributes one arc, every other edge two.
"""

from __future__ import annotations

import heapq
from collections import deque

BACKEND = "python"


def closed_walk_girths(n, offsets, targets, costs, shifts):
    """Shortest nonempty closed walk per Z2^2 state, over all base vertices.

    Returns a list of four ints indexed by state ``2*neg + odd``; -1 means
    no such closed walk exists.
    """
    best = [-1, -1, -1, -1]
    unit = all(c == 1 for c in costs)
    for s in range(n):
        dist = [-1] * (4 * n)
        if unit:
            queue = deque()
            for a in range(offsets[s], offsets[s + 1]):
                st = targets[a] * 4 + shifts[a]
                if dist[st] < 0:
                    dist[st] = 1
                    queue.append(st)
            while queue:
                st = queue.popleft()
                v, mask = divmod(st, 4)
                nd = dist[st] + 1
                for a in range(offsets[v], offsets[v + 1]):
                    nxt = targets[a] * 4 + (mask ^ shifts[a])
                    if dist[nxt] < 0:
                        dist[nxt] = nd
                        queue.append(nxt)
        else:
            heap = []
            for a in range(offsets[s], offsets[s + 1]):
                heap.append((costs[a], targets[a] * 4 + shifts[a]))
            heapq.heapify(heap)
            while heap:
                d, st = heapq.heappop(heap)
                if dist[st] >= 0:
                    continue
                dist[st] = d
                v, mask = divmod(st, 4)
                for a in range(offsets[v], offsets[v + 1]):
                    nxt = targets[a] * 4 + (mask ^ shifts[a])
                    if dist[nxt] < 0:
                        heapq.heappush(heap, (d + costs[a], nxt))
        for t in range(4):
            d = dist[4 * s + t]
            if d >= 0 and (best[t] < 0 or d < best[t]):
                best[t] = d
    return best


def layered_bfs(n, offsets, targets, shifts, nstates, src):
    """BFS distances from ``(src, 0)`` in the product of the graph with a
    group of ``nstates`` XOR masks. Unreachable states get -1."""
    dist = [-1] * (n * nstates)
    start = src * nstates
    dist[start] = 0
    queue = deque([start])
    while queue:
        st = queue.popleft()
        v, mask = divmod(st, nstates)
        nd = dist[st] + 1
        for a in range(offsets[v], offsets[v + 1]):
            nxt = targets[a] * nstates + (mask ^ shifts[a])
            if dist[nxt] < 0:
                dist[nxt] = nd
                queue.append(nxt)
    return dist


def negative_cycle_partners(n, offsets, targets, signs, edge_ids, src, length, dist):
    """Flag every vertex lying on a negative simple cycle of exactly
    ``length`` edges through ``src``.

    ``dist[w]`` is the plain distance from ``w`` to ``src``; it prunes
    branches that cannot close in time.
    """
    flags = [0] * n
    on_path = [False] * n
    path = [src]
    on_path[src] = True

    def extend(v, depth, parity, last_edge):
        for a in range(offsets[v], offsets[v + 1]):
            w = targets[a]
            if w == src:
                if depth + 1 == length and edge_ids[a] != last_edge and parity ^ signs[a]:
                    for u in path:
                        flags[u] = 1
                continue
            if on_path[w] or depth + 1 + dist[w] > length or depth + 1 >= length:
                continue
            on_path[w] = True
            path.append(w)
            extend(w, depth + 1, parity ^ signs[a], edge_ids[a])
            path.pop()
            on_path[w] = False

    extend(src, 0, 0, -1)
    return flags


def hom_search(order, back_ptr, back_pos, back_sign, loop_need, nt, tgt_mask):
    """Backtracking search for a switching homomorphism.

    Position ``i`` of ``order`` has constraints ``back_ptr[i]:back_ptr[i+1]``:
    an edge of sign bit ``back_sign[k]`` to the earlier position
    ``back_pos[k]``. ``tgt_mask[a*nt + b]`` holds bit 1 for a positive and bit
    2 for a negative target edge between ``a`` and ``b``.

    Returns ``(images, bits)`` indexed by position, or None.
    """
    ns = len(order)
    if ns == 0:
        return [], []
    images = [-1] * ns
    bits = [0] * ns
    cand = [-1] * ns
    top = 2 * nt
    i = 0
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
                if not tgt_mask[t * nt + images[j]] & (1 << bit):
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
                return images, bits
        else:
            cand[i] = -1
            images[i] = -1
            i -= 1
    return None
