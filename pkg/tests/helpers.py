"""Shared generators for the test suite."""

from __future__ import annotations

import random
from collections import deque

from sgh.core import NEG, POS, SignedGraph, negative_cycle, switch
from sgh.weighted import is_g_wide


def bfs_dist(g: SignedGraph, src: int) -> list:
    adj = g.adjacency()
    dist = [None] * g.n
    dist[src] = 0
    queue = deque([src])
    while queue:
        v = queue.popleft()
        for w, _, _ in adj[v]:
            if dist[w] is None:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def random_signed_graph(n: int, rng: random.Random, p: float = 0.4) -> SignedGraph:
    """Connected G(n, p) sample with uniform signs: a random spanning tree plus extra edges."""
    edges = []
    for v in range(1, n):
        edges.append((rng.randrange(v), v, rng.choice((POS, NEG))))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v, rng.choice((POS, NEG))))
    perm = list(range(n))
    rng.shuffle(perm)
    return SignedGraph(n, edges).relabel(perm)


def random_wide_graph(g: int, seed: int, ears: int = 6) -> SignedGraph:
    """A g-wide graph grown from C_{-g} by ears that close new g-cycles.

    Each ear joins two vertices at distance d by a fresh path of length
    g - d with a random sign; ears that break g-wideness are dropped. A
    random switching hides the construction.
    """
    rng = random.Random(seed)
    cur = negative_cycle(g)
    for _ in range(ears):
        u, v = rng.sample(range(cur.n), 2)
        d = bfs_dist(cur, u)[v]
        length = g - d
        if length < 1:
            continue
        inner = list(range(cur.n, cur.n + length - 1))
        path = [u] + inner + [v]
        neg_at = rng.randrange(length) if rng.random() < 0.5 else -1
        new = [(a, b, NEG if i == neg_at else POS) for i, (a, b) in enumerate(zip(path, path[1:]))]
        trial = SignedGraph(cur.n + len(inner), list(cur.edges) + new)
        if is_g_wide(trial, g):
            cur = trial
    xs = [v for v in range(cur.n) if rng.random() < 0.5]
    return switch(cur, xs)


def walk_girths_by_length(g: SignedGraph, cap: int = 40) -> tuple:
    """Walk-girths by stepping every closed-walk length up to ``cap``.

    Independent of the kernels: a set of reachable (vertex, sign, parity)
    states per start vertex, advanced one edge at a time.
    """
    best = [float("inf")] * 4
    adj = g.adjacency()
    for s in range(g.n):
        frontier = {(s, 0, 0)}
        for length in range(1, cap + 1):
            frontier = {
                (w, neg ^ (sign < 0), odd ^ 1)
                for v, neg, odd in frontier
                for w, sign, _ in adj[v]
            }
            for v, neg, odd in frontier:
                if v == s:
                    best[2 * neg + odd] = min(best[2 * neg + odd], length)
    return tuple(best)


def weighted_walk_girths_by_length(g, cap: int = 60) -> tuple:
    """Same idea for weighted graphs: reachable states indexed by exact total length."""
    best = [float("inf")] * 4
    adj = g.adjacency()
    for s in range(g.n):
        at = {0: {(s, 0, 0)}}
        for length in range(1, cap + 1):
            here = set()
            for u in range(g.n):
                for w, wt in adj[u]:
                    for v, neg, odd in at.get(length - abs(wt), ()):
                        if v == u:
                            here.add((w, neg ^ (wt < 0), odd ^ (abs(wt) & 1)))
            at[length] = here
            for v, neg, odd in here:
                if v == s:
                    best[2 * neg + odd] = min(best[2 * neg + odd], length)
    return tuple(best)


# acceptance lines, echoed in the terminal summary by conftest.py
ACCEPTANCE: list = []


def report(number: int, ok: bool, detail: str) -> bool:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
    ACCEPTANCE.append((number, line))
    print(line)
    return ok
