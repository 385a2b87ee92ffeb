"""Weighted signed graphs, g-wideness, and the T_g(p, q, r) gadget."""

from __future__ import annotations

import json
from functools import lru_cache
from dataclasses import dataclass, field
from itertools import product

from . import kernels
from .core import (
    NEG,
    POS,
    GirthVector,
    GraphError,
    SignedGraph,
    negative_cycle_girths,
    walk_girths,
)


@dataclass(frozen=True)
class WeightedSignedGraph:
    """Graph with nonzero integer edge weights; sign is the weight's sign and
    length its absolute value. Edges are ``(u, v, w)`` with ``u <= v``,
    deduplicated and sorted."""

    n: int
    edges: tuple = ()
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("a graph needs at least one vertex")
        norm = set()
        for e in self.edges:
            u, v, w = (int(x) for x in e)
            if w == 0:
                raise GraphError(f"edge {e!r} has weight 0")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {e!r} has an endpoint outside 0..{self.n - 1}")
            norm.add((min(u, v), max(u, v), w))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @property
    def k(self) -> int:
        """Largest absolute weight."""
        return max((abs(w) for _, _, w in self.edges), default=0)

    def adjacency(self):
        adj = [[] for _ in range(self.n)]
        for u, v, w in self.edges:
            adj[u].append((v, w))
            if u != v:
                adj[v].append((u, w))
        return adj

    def is_connected(self) -> bool:
        adj = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w, _ in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def weight_map(self) -> dict:
        """``{(u, v): w}`` for a graph without parallel edges, both orientations."""
        out = {}
        for u, v, w in self.edges:
            if (u, v) in out:
                raise GraphError(f"parallel edges between {u} and {v}")
            out[(u, v)] = out[(v, u)] = w
        return out

    def to_json(self) -> dict:
        out = {"n": self.n, "edges": [list(e) for e in self.edges]}
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_json(cls, data) -> "WeightedSignedGraph":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls(int(data["n"]), [tuple(e) for e in data["edges"]], data.get("name"))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, GraphError):
                raise
            raise GraphError(f"malformed weighted graph: {exc}") from exc

    def to_dot(self) -> str:
        lines = [f"graph {json.dumps(self.name or 'G')} {{"]
        lines += [f"  {v};" for v in range(self.n)]
        for u, v, w in self.edges:
            style = ", style=dashed, color=red" if w < 0 else ""
            lines.append(f'  {u} -- {v} [label="{w}"{style}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def from_signed(g: SignedGraph) -> WeightedSignedGraph:
    """The 1-weighted graph of a signed graph."""
    return WeightedSignedGraph(g.n, [(u, v, s) for u, v, s in g.edges], g.name)


def weighted_switch(g: WeightedSignedGraph, x) -> WeightedSignedGraph:
    xs = set(x)
    return WeightedSignedGraph(
        g.n, [(u, v, -w if (u in xs) != (v in xs) else w) for u, v, w in g.edges], g.name
    )


def weighted_walk_girths(g: WeightedSignedGraph) -> GirthVector:
    if not g.edges:
        raise GraphError("walk-girths need at least one edge")
    if not g.is_connected():
        raise GraphError(f"graph on {g.n} vertices is not connected")
    table = kernels.arc_table(g.n, [(u, v, abs(w), int(w < 0)) for u, v, w in g.edges])
    return GirthVector.from_kernel(kernels.closed_walk_girths(table))


def girths_of(g) -> GirthVector:
    if isinstance(g, WeightedSignedGraph):
        return weighted_walk_girths(g)
    return walk_girths(g)


def is_g_wide(g, gv: int) -> bool:
    """Every walk-girth of ``g`` is at least that of C_{-gv}."""
    if gv < 1:
        raise GraphError("g must be positive")
    return girths_of(g).dominates(negative_cycle_girths(gv))


def _check_triple(p, q, r, g):
    if g < 2:
        raise GraphError("g must be at least 2")
    for x in (p, q, r):
        if not 1 <= abs(x) <= g - 1:
            raise GraphError(f"triple ({p}, {q}, {r}) out of range for g={g}")


def _path(start, end, length, sign, next_id, edges):
    """Append a ``start``-``end`` path; one negative edge (the first) if sign < 0."""
    verts = [start] + list(range(next_id, next_id + length - 1)) + [end]
    for i in range(length):
        s = NEG if (sign < 0 and i == 0) else POS
        edges.append((verts[i], verts[i + 1], s))
    return next_id + length - 1


def build_T(p: int, q: int, r: int, g: int) -> SignedGraph:
    """Three negative g-cycles through x=0, y=1, z=2.

    The x-y cycle is a path of length |p| with the sign of p plus a path of
    length g-|p| with the opposite sign; likewise (y, z, q) and (z, x, r).
    Internal vertices are numbered from 3 in path order.
    """
    _check_triple(p, q, r, g)
    edges = []
    nxt = 3
    for a, b, t in ((0, 1, p), (1, 2, q), (2, 0, r)):
        sign = 1 if t > 0 else -1
        nxt = _path(a, b, abs(t), sign, nxt, edges)
        nxt = _path(a, b, g - abs(t), -sign, nxt, edges)
    return SignedGraph(nxt, edges, f"T_{g}({p},{q},{r})")


def triple_is_g_wide(p: int, q: int, r: int, g: int) -> bool:
    """Closed-form g-wide test for a weighted triangle (p, q, r)."""
    zeros = [x == 0 for x in (p, q, r)].count(True)
    if zeros:
        if zeros > 1:
            raise GraphError("at most one entry of a triple may be 0")
        rest = [x for x in (p, q, r) if x != 0]
        if any(abs(x) > g - 1 for x in rest):
            raise GraphError(f"triple ({p}, {q}, {r}) out of range for g={g}")
        return rest[0] == rest[1]
    _check_triple(p, q, r, g)
    a, b, c = abs(p), abs(q), abs(r)
    total = a + b + c
    if p * q * r > 0:
        return total % 2 == 0 and 2 * max(a, b, c) <= total <= 2 * g
    return total % 2 == g % 2 and g <= total <= g + 2 * min(a, b, c)


@lru_cache(maxsize=None)
def enumerate_Lg(g: int) -> frozenset:
    """All ordered g-wide triples with every entry in ``1..g-1`` in absolute value."""
    if g < 2:
        raise GraphError("g must be at least 2")
    values = [x for x in range(-(g - 1), g) if x != 0]
    return frozenset(t for t in product(values, repeat=3) if triple_is_g_wide(*t, g))


@lru_cache(maxsize=None)
def positive_Lg(g: int) -> frozenset:
    """Members of L_g with all entries positive."""
    return frozenset(t for t in enumerate_Lg(g) if min(t) > 0)


def canonical_triple(p: int, q: int, r: int, g: int) -> tuple:
    """The all-positive presentation: a negative entry x becomes g + x."""
    _check_triple(p, q, r, g)
    return tuple(x if x > 0 else g + x for x in (p, q, r))


def sign_flip_variants(p: int, q: int, r: int) -> list:
    """Switching at x, y, z respectively."""
    return [(-p, q, -r), (-p, -q, r), (p, -q, -r)]
