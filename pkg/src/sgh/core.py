"""Signed multigraphs, switching, and the four walk-girths."""

from __future__ import annotations

import json
import math
from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from . import kernels

INF = math.inf
POS, NEG = 1, -1

C01, C10, C11, MIXED = "C01", "C10", "C11", "mixed"


class GraphError(ValueError):
    """Malformed graph input or an operation outside its domain."""


class DisconnectedError(GraphError):
    pass


def parse_sign(s) -> int:
    if s in ("+", 1, "1", "+1"):
        return POS
    if s in ("-", -1, "-1"):
        return NEG
    raise GraphError(f"bad sign {s!r}")


def sign_str(s: int) -> str:
    return "+" if s > 0 else "-"


@dataclass(frozen=True)
class SignedGraph:
    """Signed multigraph on vertices ``0..n-1``.

    Edges are stored as ``(u, v, sign)`` with ``u <= v`` and sign in {+1, -1},
    deduplicated and sorted, so an edge's index is stable. Loops are allowed;
    parallel edges survive only with distinct signs.
    """

    n: int
    edges: tuple = ()
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("a graph needs at least one vertex")
        norm = set()
        for e in self.edges:
            u, v, s = e
            u, v, s = int(u), int(v), parse_sign(s)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {e!r} has an endpoint outside 0..{self.n - 1}")
            norm.add((min(u, v), max(u, v), s))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def pairs(self):
        """Endpoint pair -> set of signs present on it."""
        out = defaultdict(set)
        for u, v, s in self.edges:
            out[(u, v)].add(s)
        return out

    def adjacency(self):
        adj = [[] for _ in range(self.n)]
        for idx, (u, v, s) in enumerate(self.edges):
            adj[u].append((v, s, idx))
            if u != v:
                adj[v].append((u, s, idx))
        return adj

    def is_connected(self) -> bool:
        return len(_component(self, 0)) == self.n

    def relabel(self, perm) -> "SignedGraph":
        """Image of the graph under the vertex map ``v -> perm[v]``."""
        return SignedGraph(self.n, [(perm[u], perm[v], s) for u, v, s in self.edges], self.name)

    def arc_table(self):
        return kernels.arc_table(self.n, [(u, v, 1, int(s < 0)) for u, v, s in self.edges])

    def to_json(self) -> dict:
        out = {"n": self.n, "edges": [[u, v, sign_str(s)] for u, v, s in self.edges]}
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_json(cls, data) -> "SignedGraph":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls(int(data["n"]), [tuple(e) for e in data["edges"]], data.get("name"))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, GraphError):
                raise
            raise GraphError(f"malformed signed graph: {exc}") from exc

    def to_dot(self) -> str:
        lines = [f"graph {json.dumps(self.name or 'G')} {{"]
        lines += [f"  {v};" for v in range(self.n)]
        for u, v, s in self.edges:
            style = "" if s > 0 else " [style=dashed, color=red]"
            lines.append(f"  {u} -- {v}{style};")
        lines.append("}")
        return "\n".join(lines) + "\n"


class GirthVector(NamedTuple):
    """Shortest closed walk of each type ``ij`` (i: negative, j: odd)."""

    g00: float
    g01: float
    g10: float
    g11: float

    def at(self, i: int, j: int):
        return self[2 * i + j]

    def dominates(self, other: "GirthVector") -> bool:
        """Entrywise ``>=``, the no-homomorphism comparison."""
        return all(a >= b for a, b in zip(self, other))

    def to_json(self) -> dict:
        return {k: (None if v == INF else int(v)) for k, v in self._asdict().items()}

    @classmethod
    def from_kernel(cls, raw) -> "GirthVector":
        return cls(*(INF if d < 0 else d for d in raw))


def _component(g: SignedGraph, start: int) -> set:
    adj = g.adjacency()
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w, _, _ in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def require_connected(g) -> None:
    if not g.is_connected():
        raise DisconnectedError(f"graph on {g.n} vertices is not connected")


# small named graphs


def negative_cycle(k: int) -> SignedGraph:
    """C_{-k}: a k-cycle whose closing edge ``(k-1, 0)`` is the only negative one.

    ``k = 1`` is a negative loop and ``k = 2`` the digon.
    """
    if k < 1:
        raise GraphError("cycle length must be positive")
    if k == 1:
        return SignedGraph(1, [(0, 0, NEG)], "C-1")
    edges = [(i, i + 1, POS) for i in range(k - 1)] + [(k - 1, 0, NEG)]
    return SignedGraph(k, edges, f"C-{k}")


def digon() -> SignedGraph:
    return SignedGraph(2, [(0, 1, POS), (0, 1, NEG)], "digon")


def negative_loop() -> SignedGraph:
    return SignedGraph(1, [(0, 0, NEG)], "negative-loop")


# operations


def switch(g: SignedGraph, x: Iterable[int]) -> SignedGraph:
    """Flip the sign of every edge with exactly one endpoint in ``x``."""
    xs = set(x)
    for v in xs:
        if not 0 <= v < g.n:
            raise GraphError(f"switching vertex {v} out of range")
    return SignedGraph(
        g.n,
        [(u, v, -s if (u in xs) != (v in xs) else s) for u, v, s in g.edges],
        g.name,
    )


def walk_girths(g: SignedGraph) -> GirthVector:
    """The four walk-girths via one product-graph search per base vertex."""
    if not g.edges:
        raise GraphError("walk-girths need at least one edge")
    require_connected(g)
    return GirthVector.from_kernel(kernels.closed_walk_girths(g.arc_table()))


def negative_cycle_girths(k: int) -> GirthVector:
    """Girth vector of C_{-k}, from the parity argument rather than a search."""
    if k < 1:
        raise GraphError("k must be positive")
    if k % 2:
        return GirthVector(2, INF, INF, k)
    return GirthVector(2, INF, k, INF)


def switching_equivalent(a: SignedGraph, b: SignedGraph):
    """A switching set ``X`` with ``switch(a, X) == b``, or None.

    Works edge-pair by edge-pair: a single edge whose signs disagree must
    cross the cut, one that agrees must not. Equivalence holds iff those
    constraints 2-colour.
    """
    pa, pb = a.pairs(), b.pairs()
    if a.n != b.n or _multiplicity(pa) != _multiplicity(pb):
        raise GraphError("graphs do not share an underlying multigraph")
    constraints = defaultdict(list)
    for (u, v), signs in pa.items():
        other = pb[(u, v)]
        if signs == other:
            if len(signs) == 1 and u != v:
                constraints[u].append((v, 0))
                constraints[v].append((u, 0))
        elif u != v and {-s for s in signs} == other:
            constraints[u].append((v, 1))
            constraints[v].append((u, 1))
        else:
            return None
    colour = [-1] * a.n
    for root in range(a.n):
        if colour[root] >= 0:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w, flip in constraints[v]:
                want = colour[v] ^ flip
                if colour[w] < 0:
                    colour[w] = want
                    queue.append(w)
                elif colour[w] != want:
                    return None
    return frozenset(v for v in range(a.n) if colour[v])


def _multiplicity(pairs):
    return {p: len(s) for p, s in pairs.items()}


def is_bipartite(g: SignedGraph) -> bool:
    colour = [-1] * g.n
    adj = g.adjacency()
    for root in range(g.n):
        if colour[root] >= 0:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w, _, _ in adj[v]:
                if colour[w] < 0:
                    colour[w] = colour[v] ^ 1
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return False
    return True


def class_of(g: SignedGraph) -> str:
    """C10 (bipartite), C11 (antibalanced), C01 (balanced) or mixed.

    A balanced bipartite graph reports C10.
    """
    require_connected(g)
    if is_bipartite(g):
        return C10
    if switching_equivalent(g, SignedGraph(g.n, [(u, v, NEG) for u, v, _ in g.edges])) is not None:
        return C11
    if switching_equivalent(g, SignedGraph(g.n, [(u, v, POS) for u, v, _ in g.edges])) is not None:
        return C01
    return MIXED


def simple_cycles(g: SignedGraph):
    """Every simple cycle as a frozenset of edge indices (loops and digons
    included). Exponential; for small graphs only."""
    adj = g.adjacency()
    found = set()
    for idx, (u, v, _) in enumerate(g.edges):
        if u == v:
            found.add(frozenset([idx]))
    for start in range(g.n):
        stack = [(start, -1, [start], [])]
        while stack:
            v, last, verts, used = stack.pop()
            for w, _, idx in adj[v]:
                if w == v or idx == last:
                    continue
                if w == start and used:
                    found.add(frozenset(used + [idx]))
                elif w > start and w not in verts:
                    stack.append((w, idx, verts + [w], used + [idx]))
    return found


def cycle_sign(g: SignedGraph, cycle) -> int:
    out = 1
    for idx in cycle:
        out *= g.edges[idx][2]
    return out


def negative_cycles(g: SignedGraph):
    return {c for c in simple_cycles(g) if cycle_sign(g, c) < 0}
