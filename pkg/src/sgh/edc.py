"""Extended Double Cover, signed projective cubes, and walk lifting.

Cover vertex numbering: ``v+ = 2v`` and ``v- = 2v + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import NEG, POS, GraphError, SignedGraph
from .weighted import WeightedSignedGraph


def plus(v: int) -> int:
    return 2 * v


def minus(v: int) -> int:
    return 2 * v + 1


def cover(v: int, sign: int) -> int:
    return 2 * v + (sign < 0)


def base_of(x: int) -> tuple:
    """``(base vertex, side)`` of a cover vertex; side is +1 or -1."""
    return x >> 1, (NEG if x & 1 else POS)


def edc(g: SignedGraph) -> SignedGraph:
    """Negative rung at every vertex; a positive edge lifts to two straight
    positive edges, a negative one to two crossing positive edges.

    A negative loop at ``v`` lifts to the positive edge ``v+ v-``, which sits
    beside the rung as a digon.
    """
    edges = [(plus(v), minus(v), NEG) for v in range(g.n)]
    for u, v, s in g.edges:
        if s > 0:
            edges += [(plus(u), plus(v), POS), (minus(u), minus(v), POS)]
        else:
            edges += [(plus(u), minus(v), POS), (minus(u), plus(v), POS)]
    name = f"EDC({g.name})" if g.name else None
    return SignedGraph(2 * g.n, edges, name)


def edc_weighted(g: WeightedSignedGraph) -> WeightedSignedGraph:
    edges = [(plus(v), minus(v), -1) for v in range(g.n)]
    for u, v, w in g.edges:
        p = abs(w)
        straight, crossing = (p, -(p + 1)) if w > 0 else (-(p + 1), p)
        edges += [
            (plus(u), plus(v), straight),
            (minus(u), minus(v), straight),
            (plus(u), minus(v), crossing),
            (minus(u), plus(v), crossing),
        ]
    name = f"EDC({g.name})" if g.name else None
    return WeightedSignedGraph(2 * g.n, edges, name)


def spc(k: int) -> SignedGraph:
    """SPC(k) on Z_2^k: positive edges at Hamming distance 1, negative edges
    between complementary vectors."""
    if k < 1:
        raise GraphError("dimension must be at least 1")
    full = (1 << k) - 1
    edges = []
    for x in range(1 << k):
        for i in range(k):
            y = x ^ (1 << i)
            if x < y:
                edges.append((x, y, POS))
        if x < x ^ full:
            edges.append((x, x ^ full, NEG))
    return SignedGraph(1 << k, edges, f"SPC({k})")


def spc_cover_bijection(k: int) -> list:
    """Map ``edc(spc(k-1))`` vertex ids onto ``spc(k)`` ids.

    ``x+`` goes to ``(x, 0)`` and ``x-`` to ``(complement of x, 1)``, the last
    bit being the lowest one. The complement on the minus side is what turns
    the rungs into antipodal pairs.
    """
    if k < 2:
        raise GraphError("k must be at least 2")
    full = (1 << (k - 1)) - 1
    out = [0] * (1 << k)
    for x in range(1 << (k - 1)):
        out[plus(x)] = x << 1
        out[minus(x)] = ((x ^ full) << 1) | 1
    return out


@dataclass(frozen=True)
class Walk:
    """A walk given by its vertex sequence and the edge indices between them."""

    vertices: tuple
    edges: tuple

    def __len__(self):
        return len(self.edges)

    @property
    def closed(self) -> bool:
        return self.vertices[0] == self.vertices[-1]


def walk_from_vertices(g: SignedGraph, vertices, signs=None) -> Walk:
    """Resolve a vertex sequence to edges; ``signs`` picks among parallel edges."""
    index = {}
    for idx, (u, v, s) in enumerate(g.edges):
        index[(u, v, s)] = index[(v, u, s)] = idx
    edges = []
    for i, (a, b) in enumerate(zip(vertices, vertices[1:])):
        wanted = [signs[i]] if signs is not None else [POS, NEG]
        found = [index[(a, b, s)] for s in wanted if (a, b, s) in index]
        if not found:
            raise GraphError(f"no edge {a}-{b} for the walk")
        edges.append(found[0])
    return Walk(tuple(vertices), tuple(edges))


def check_walk(g: SignedGraph, walk: Walk) -> None:
    if len(walk.vertices) != len(walk.edges) + 1:
        raise GraphError("walk needs one more vertex than edges")
    for i, idx in enumerate(walk.edges):
        if not 0 <= idx < g.m:
            raise GraphError(f"edge index {idx} out of range")
        u, v, _ = g.edges[idx]
        if {walk.vertices[i], walk.vertices[i + 1]} != {u, v}:
            raise GraphError(f"edge {idx} does not join {walk.vertices[i]} and {walk.vertices[i + 1]}")


def walk_sign(g: SignedGraph, walk: Walk) -> int:
    out = 1
    for idx in walk.edges:
        out *= g.edges[idx][2]
    return out


def lift_walk(g: SignedGraph, walk: Walk, start_sign: int = POS, cover_graph=None) -> Walk:
    """Lift a walk of ``g`` into ``edc(g)`` from the ``start_sign`` copy.

    A positive edge keeps the side, a negative one switches it. A closed
    walk that ends on the other side gets the closing rung appended.
    """
    check_walk(g, walk)
    h = cover_graph or edc(g)
    index = {}
    for idx, (u, v, s) in enumerate(h.edges):
        index.setdefault((u, v, s), idx)
        index.setdefault((v, u, s), idx)
    side = start_sign
    verts = [cover(walk.vertices[0], side)]
    edges = []
    for i, idx in enumerate(walk.edges):
        s = g.edges[idx][2]
        nxt_side = side * s
        a = verts[-1]
        b = cover(walk.vertices[i + 1], nxt_side)
        edges.append(index[(a, b, POS)])
        verts.append(b)
        side = nxt_side
    if walk.closed and len(walk) and side != start_sign:
        v = walk.vertices[0]
        edges.append(index[(verts[-1], cover(v, start_sign), NEG)])
        verts.append(cover(v, start_sign))
    return Walk(tuple(verts), tuple(edges))
