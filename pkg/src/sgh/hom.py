"""Switching homomorphisms: search, verification, and random test inputs."""

from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass

from . import kernels
from .core import (
    C10,
    C11,
    NEG,
    POS,
    GraphError,
    SignedGraph,
    cycle_sign,
    is_bipartite,
    negative_cycle_girths,
    simple_cycles,
    switching_equivalent,
    walk_girths,
)


class GenerationError(RuntimeError):
    """The rejection budget ran out before a graph met the request."""


@dataclass(frozen=True)
class Homomorphism:
    """Switch bits, vertex images and edge images of a homomorphism.

    A source vertex with bit 1 is switched before mapping; ``edge_map[i]`` is
    the target edge index that source edge ``i`` lands on.
    """

    switch_bits: tuple
    vertex_map: tuple
    edge_map: tuple

    @property
    def switching(self) -> frozenset:
        return frozenset(v for v, b in enumerate(self.switch_bits) if b)

    def to_json(self) -> dict:
        return {
            "switch_bits": list(self.switch_bits),
            "vertex_map": list(self.vertex_map),
            "edge_map": list(self.edge_map),
        }

    @classmethod
    def from_json(cls, data) -> "Homomorphism":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls(
                tuple(int(b) for b in data["switch_bits"]),
                tuple(int(v) for v in data["vertex_map"]),
                tuple(int(e) for e in data["edge_map"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphError(f"malformed homomorphism: {exc}") from exc


def no_hom_filter(src: SignedGraph, tgt: SignedGraph) -> bool:
    """False means no homomorphism can exist: some walk-girth of ``src`` is
    smaller than the matching one of ``tgt``."""
    return walk_girths(src).dominates(walk_girths(tgt))


def _search_order(g: SignedGraph) -> list:
    """BFS from a max-degree root, component by component."""
    adj = g.adjacency()
    seen = [False] * g.n
    out = []
    while len(out) < g.n:
        rest = [v for v in range(g.n) if not seen[v]]
        root = max(rest, key=lambda v: (len(adj[v]), -v))
        seen[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            out.append(v)
            for w, _, _ in sorted(adj[v]):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return out


def _edge_index(tgt: SignedGraph) -> dict:
    out = {}
    for idx, (u, v, s) in enumerate(tgt.edges):
        out.setdefault((u, v, s), idx)
        out.setdefault((v, u, s), idx)
    return out


def _edge_map(src, tgt, bits, images) -> tuple:
    index = _edge_index(tgt)
    out = []
    for u, v, s in src.edges:
        sign = s * (-1 if bits[u] != bits[v] else 1)
        key = (images[u], images[v], sign)
        if key not in index:
            raise GraphError(f"no target edge for source edge {u}-{v}")
        out.append(index[key])
    return tuple(out)


def find_homomorphism(src: SignedGraph, tgt: SignedGraph, use_filter: bool = True, backend=None):
    """First witness in the fixed search order, or None.

    With ``use_filter`` the walk-girth test runs first and a failure returns
    None without searching.
    """
    if use_filter and src.edges and tgt.edges and not no_hom_filter(src, tgt):
        return None
    order = _search_order(src)
    pos = {v: i for i, v in enumerate(order)}
    back = [[] for _ in order]
    loop_need = [0] * src.n
    for u, v, s in src.edges:
        bit = int(s < 0)
        if u == v:
            loop_need[pos[u]] |= 1 << bit
            continue
        a, b = sorted((pos[u], pos[v]))
        back[b].append((a, bit))
    back_ptr, back_pos, back_sign = [0], [], []
    for cons in back:
        for a, bit in cons:
            back_pos.append(a)
            back_sign.append(bit)
        back_ptr.append(len(back_pos))
    nt = tgt.n
    mask = [0] * (nt * nt)
    for u, v, s in tgt.edges:
        flag = 1 if s > 0 else 2
        mask[u * nt + v] |= flag
        mask[v * nt + u] |= flag
    found = kernels.hom_search(
        order, back_ptr, back_pos, back_sign, loop_need, nt, mask, backend=backend
    )
    if found is None:
        return None
    img_by_pos, bits_by_pos = found
    images = [0] * src.n
    bits = [0] * src.n
    for i, v in enumerate(order):
        images[v] = img_by_pos[i]
        bits[v] = bits_by_pos[i]
    return Homomorphism(tuple(bits), tuple(images), _edge_map(src, tgt, bits, images))


def verify_homomorphism(h: Homomorphism, src: SignedGraph, tgt: SignedGraph) -> bool:
    """Switch ``src`` by the bits, then every edge must land on its image
    edge with matching endpoints and sign."""
    if len(h.switch_bits) != src.n or len(h.vertex_map) != src.n or len(h.edge_map) != src.m:
        raise GraphError("homomorphism does not match the source graph's shape")
    if any(b not in (0, 1) for b in h.switch_bits):
        raise GraphError("switch bits must be 0 or 1")
    if any(not 0 <= t < tgt.n for t in h.vertex_map):
        raise GraphError("vertex image out of range")
    if any(not 0 <= e < tgt.m for e in h.edge_map):
        raise GraphError("edge image out of range")
    for idx, (u, v, s) in enumerate(src.edges):
        s2 = s * (-1 if h.switch_bits[u] != h.switch_bits[v] else 1)
        a, b, t = tgt.edges[h.edge_map[idx]]
        if {a, b} != {h.vertex_map[u], h.vertex_map[v]} or t != s2:
            return False
    return True


# random inputs


def random_two_tree(n: int, rng: random.Random) -> list:
    """Edges of a random 2-tree: start from an edge, then join each new
    vertex to both ends of an existing edge."""
    if n < 2:
        raise GraphError("n must be at least 2")
    edges = [(0, 1)]
    for v in range(2, n):
        a, b = rng.choice(edges)
        edges += [(a, v), (b, v)]
    return edges


def _removable(n, edges):
    """Edges whose removal keeps the graph connected."""
    return [e for e in edges if _connected(n, [f for f in edges if f != e])]


def _bad_cycle_edges(g: SignedGraph, want, cls) -> set:
    """Edges on a cycle that is too short for its type or breaks the class."""
    out = set()
    for cyc in simple_cycles(g):
        length, neg = len(cyc), cycle_sign(g, cyc) < 0
        bad = length < want.at(int(neg), length % 2)
        bad = bad or (cls == C10 and length % 2) or (cls == C11 and neg != bool(length % 2))
        if bad:
            out.update(g.edges[i] for i in cyc)
    return out


def _connected(n, edges):
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def in_class(g: SignedGraph, cls: str) -> bool:
    """Membership, not the single label of ``class_of``: C10 is bipartite,
    C11 is switching equivalent to all-negative, so a bipartite antibalanced
    graph is in both."""
    if cls == C10:
        return is_bipartite(g)
    if cls == C11:
        return switching_equivalent(g, SignedGraph(g.n, [(u, v, NEG) for u, v, _ in g.edges])) is not None
    raise GraphError(f"class must be {C10} or {C11}, got {cls!r}")


def _class_feasible(g, cls):
    if cls not in (C10, C11):
        raise GraphError(f"class must be {C10} or {C11}, got {cls!r}")
    if cls == C11 and g % 2 == 0:
        raise GraphError(f"no C11 graph is {g}-wide for even g")


def random_sp_signed_graph(n: int, seed: int, girth_spec: tuple, budget: int = 10_000) -> SignedGraph:
    """Random connected signed partial 2-tree that is g-wide and in class ``cls``.

    Each attempt signs a fresh random 2-tree, then deletes random non-bridge
    edges until the graph is g-wide and in the class. C10 requests draw
    uniform signs; C11 requests switch the all-negative signature at a
    uniform random vertex set. Since a spanning tree always qualifies the
    budget is a safeguard, and the deletions stop as soon as the girth test
    passes, so the outputs keep cycles.
    """
    g, cls = girth_spec
    if g < 2:
        raise GraphError("g must be at least 2")
    _class_feasible(g, cls)
    rng = random.Random(f"{n}:{seed}:{g}:{cls}")
    want = negative_cycle_girths(g)
    for _ in range(budget):
        tree = random_two_tree(n, rng)
        if cls == C10:
            sign = {e: rng.choice((POS, NEG)) for e in tree}
        else:
            xs = {v for v in range(n) if rng.random() < 0.5}
            sign = {(u, v): POS if (u in xs) != (v in xs) else NEG for u, v in tree}
        edges = list(tree)
        while True:
            sg = SignedGraph(n, [(u, v, sign[(u, v)]) for u, v in edges], f"sp-{n}-{seed}")
            if in_class(sg, cls) and walk_girths(sg).dominates(want):
                return sg
            choices = _bad_cycle_edges(sg, want, cls) or _removable(n, edges)
            if not choices:
                break
            u, v, _ = rng.choice(sorted(choices))
            edges.remove((u, v))
    raise GenerationError(f"no {g}-wide {cls} graph on {n} vertices within {budget} attempts")
