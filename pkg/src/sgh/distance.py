"""Algebraic distance, girth-transformed distance graphs, g-closed triangle
sets, SP-completeness certificates and their lift to the double cover."""

from __future__ import annotations

import json
from array import array
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from . import kernels
from .core import GraphError, SignedGraph, require_connected
from .edc import base_of, cover, edc
from .weighted import WeightedSignedGraph, is_g_wide, positive_Lg


class CertificateError(ValueError):
    """A certificate failed validation."""


class TheoremViolation(RuntimeError):
    """A constructive step that a proven statement guarantees has failed."""


# distances


def _layers(g: SignedGraph, u: int):
    table = g.arc_table()
    return kernels.layered_bfs(table, table.signs, 2, u)


def algebraic_distance(g: SignedGraph, u: int, v: int) -> int:
    """``+d`` if a positive u-v path of length ``d = dist(u, v)`` exists, else ``-d``."""
    if u == v:
        raise GraphError("algebraic distance is undefined for u == v")
    for x in (u, v):
        if not 0 <= x < g.n:
            raise GraphError(f"vertex {x} out of range")
    require_connected(g)
    return algebraic_distances(g, u)[v]


def algebraic_distances(g: SignedGraph, u: int) -> list:
    """Algebraic distances from ``u`` to every vertex (None at ``u`` itself)."""
    layers = _layers(g, u)
    out = []
    for v in range(g.n):
        dp, dm = layers[2 * v], layers[2 * v + 1]
        if v == u:
            out.append(None)
            continue
        reach = [d for d in (dp, dm) if d >= 0]
        if not reach:
            raise GraphError(f"vertex {v} unreachable from {u}")
        d = min(reach)
        out.append(d if dp == d else -d)
    return out


def f_g_transform(x: int, g: int) -> int:
    """Girth transform: positive distances stay, negative ones become ``g + x``."""
    if x == 0:
        raise GraphError("f_g is undefined at 0")
    if not -((g + 1) // 2) + 1 <= x <= g // 2:
        raise GraphError(f"{x} outside the domain of f_{g}")
    return x if x > 0 else g + x


def negative_g_cycle_partners(g: SignedGraph, u: int, gv: int) -> frozenset:
    """Vertices sharing a negative cycle of length exactly ``gv`` with ``u``."""
    table = g.arc_table()
    zeros = array("i", [0]) * len(table.targets)
    plain = kernels.layered_bfs(table, zeros, 1, u)
    dist = [d if d >= 0 else gv + 1 for d in plain]
    flags = kernels.negative_cycle_partners(table, u, gv, dist)
    return frozenset(v for v in range(g.n) if flags[v] and v != u)


def pair_on_negative_g_cycle(g: SignedGraph, u: int, v: int, gv: int) -> bool:
    require_connected(g)
    return v in negative_g_cycle_partners(g, u, gv)


def negative_g_cycle_pairs(g: SignedGraph, gv: int) -> set:
    """All pairs ``(u, v)``, ``u < v``, on a common negative ``gv``-cycle."""
    out = set()
    for u in range(g.n):
        out.update((u, v) for v in negative_g_cycle_partners(g, u, gv) if u < v)
    return out


def build_girth_transformed_distance_graph(base: SignedGraph, pairs, g: int) -> WeightedSignedGraph:
    """Weight each pair by ``f_g`` of its algebraic distance in ``base``."""
    require_connected(base)
    pairs = sorted((min(p), max(p)) for p in pairs)
    on_cycle = {}
    rows = {}
    edges = []
    for u, v in pairs:
        if u == v:
            raise GraphError(f"pair ({u}, {v}) is not a pair of distinct vertices")
        if u not in on_cycle:
            on_cycle[u] = negative_g_cycle_partners(base, u, g)
            rows[u] = algebraic_distances(base, u)
        if v not in on_cycle[u]:
            raise GraphError(f"({u}, {v}) do not lie on a common negative {g}-cycle")
        edges.append((u, v, f_g_transform(rows[u][v], g)))
    return WeightedSignedGraph(base.n, edges)


# triangle sets


@dataclass(frozen=True)
class TriangleSet:
    host: WeightedSignedGraph
    triangles: frozenset = frozenset()

    def __post_init__(self):
        tris = frozenset(tuple(sorted(t)) for t in self.triangles)
        weights = self.host.weight_map()
        for t in tris:
            if len(set(t)) != 3:
                raise GraphError(f"triangle {t} repeats a vertex")
            for a, b in combinations(t, 2):
                if (a, b) not in weights:
                    raise GraphError(f"triangle {t} uses missing host edge {a}-{b}")
        object.__setattr__(self, "triangles", tris)

    @cached_property
    def weights(self) -> dict:
        return self.host.weight_map()

    @property
    def edge_set(self) -> frozenset:
        return frozenset(e for t in self.triangles for e in combinations(t, 2))


def all_triangles(host: WeightedSignedGraph) -> frozenset:
    adj = defaultdict(set)
    for u, v, _ in host.edges:
        if u != v:
            adj[u].add(v)
            adj[v].add(u)
    out = set()
    for u in adj:
        for v in adj[u]:
            if v > u:
                out.update((u, v, z) for z in adj[u] & adj[v] if z > v)
    return frozenset(out)


def is_g_closed(t: TriangleSet, g: int) -> list:
    """Closure violations as sorted ``((x, y), (p, q, r))`` pairs; empty when closed."""
    w = t.weights
    for u, v, x in t.host.edges:
        if not 1 <= x <= g - 1:
            raise GraphError(f"host edge {u}-{v} has weight {x} outside 1..{g - 1}")
    seen = defaultdict(set)
    for tri in t.triangles:
        for a, b in combinations(tri, 2):
            (z,) = set(tri) - {a, b}
            seen[(a, b)].add((w[(z, a)], w[(z, b)]))
    need = defaultdict(list)
    if g >= 2:
        for p, q, r in sorted(positive_Lg(g)):
            need[p].append((q, r))
    violations = []
    for (x, y) in sorted(seen):
        have = seen[(x, y)]
        p = w[(x, y)]
        for q, r in need[p]:
            if (q, r) not in have and (g - q, g - r) not in have:
                violations.append(((x, y), (p, q, r)))
    return violations


# certificates


def is_base_case(base: SignedGraph, g: int) -> bool:
    """The negative loop at g=1 and the digon at g=2."""
    if g == 1:
        return base.n == 1 and base.edges == ((0, 0, -1),)
    if g == 2:
        return base.n == 2 and base.edges == ((0, 1, -1), (0, 1, 1))
    return False


@dataclass(frozen=True)
class Certificate:
    """Witness that ``base`` bounds every signed K4-minor-free graph meeting
    the girth conditions of C_{-g}."""

    base: SignedGraph
    g: int
    tset: TriangleSet
    trace: dict = field(default_factory=dict, compare=False)

    @property
    def dist_graph(self) -> WeightedSignedGraph:
        return self.tset.host

    def problems(self) -> list:
        """Everything wrong with the certificate, empty if it is valid."""
        out = []
        base, g = self.base, self.g
        if g < 1:
            return [f"g={g} is not positive"]
        if not base.is_connected():
            return ["base graph is not connected"]
        if not base.edges:
            return ["base graph has no edges"]
        if not is_g_wide(base, g):
            out.append(f"base is not {g}-wide")
        if self.dist_graph.n != base.n:
            out.append("distance graph and base have different vertex counts")
            return out
        partners = {}
        rows = {}
        for u, v, w in self.dist_graph.edges:
            if u == v:
                out.append(f"distance graph has a loop at {u}")
                continue
            if u not in partners:
                partners[u] = negative_g_cycle_partners(base, u, g)
                rows[u] = algebraic_distances(base, u)
            if v not in partners[u]:
                out.append(f"{u}-{v} not on a common negative {g}-cycle")
                continue
            expect = f_g_transform(rows[u][v], g)
            if w != expect:
                out.append(f"{u}-{v} has weight {w}, expected {expect}")
        dist_edges = {(u, v) for u, v, _ in self.dist_graph.edges}
        if self.tset.triangles:
            if self.tset.edge_set != dist_edges:
                out.append("distance edges differ from the edges of the triangles")
            try:
                for (x, y), triple in is_g_closed(self.tset, g):
                    out.append(f"edge {x}-{y} misses triple {triple}")
            except GraphError as exc:
                out.append(str(exc))
        elif not is_base_case(base, g):
            out.append("triangle set is empty")
        return out

    def validate(self) -> "Certificate":
        errs = self.problems()
        if errs:
            raise CertificateError("; ".join(errs[:20]) + (" ..." if len(errs) > 20 else ""))
        return self

    def summary(self) -> dict:
        out = {
            "g": self.g,
            "base_vertices": self.base.n,
            "base_edges": self.base.m,
            "dist_edges": len(self.dist_graph.edges),
            "triangles": len(self.tset.triangles),
        }
        if self.trace:
            out["trace"] = self.trace
        return out

    def to_json(self) -> dict:
        return {
            "g": self.g,
            "base": self.base.to_json(),
            "dist_edges": [list(e) for e in self.dist_graph.edges],
            "triangles": [list(t) for t in sorted(self.tset.triangles)],
        }

    @classmethod
    def from_json(cls, data) -> "Certificate":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            base = SignedGraph.from_json(data["base"])
            host = WeightedSignedGraph(base.n, [tuple(e) for e in data["dist_edges"]])
            tris = frozenset(tuple(t) for t in data["triangles"])
            return cls(base, int(data["g"]), TriangleSet(host, tris))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, GraphError):
                raise CertificateError(str(exc)) from exc
            raise CertificateError(f"malformed certificate: {exc}") from exc


def certify_sp_complete(base: SignedGraph, g: int):
    """Search a certificate by pruning the maximal candidate to its greatest
    g-closed triangle set.

    Returns None when nothing survives; that does not prove ``base`` fails
    to be SP-complete.
    """
    require_connected(base)
    if not is_g_wide(base, g):
        raise GraphError(f"base is not {g}-wide")
    pairs = negative_g_cycle_pairs(base, g)
    full = build_girth_transformed_distance_graph(base, pairs, g)
    if is_base_case(base, g):
        return Certificate(base, g, TriangleSet(full)).validate()
    tris = set(all_triangles(full))
    while tris:
        bad = {edge for edge, _ in is_g_closed(TriangleSet(full, tris), g)}
        if not bad:
            break
        tris = {t for t in tris if not any(e in bad for e in combinations(t, 2))}
    if not tris:
        return None
    used = {e for t in tris for e in combinations(t, 2)}
    host = WeightedSignedGraph(base.n, [e for e in full.edges if (e[0], e[1]) in used])
    return Certificate(base, g, TriangleSet(host, frozenset(tris))).validate()


# lifting to the double cover


def _lifted_weight(w: dict, g: int, zc: int, xc: int):
    z, gz = base_of(zc)
    x, gx = base_of(xc)
    if z == x:
        return g if gz != gx else None
    if (z, x) not in w:
        return None
    return w[(z, x)] if gz == gx else g - w[(z, x)]


def _proof_witness(w, third, nbrs, g, xc, yc, q, r):
    """The cover vertex the closure argument names for edge ``xc yc`` and
    triple ``(p, q, r)`` of L_{g+1}, searched only among lifts of base
    triangles, base neighbours, and the rung partners."""
    x, sx = base_of(xc)
    y, sy = base_of(yc)
    if sx < 0:
        xc, yc = cover(x, 1), cover(y, -sy)
    big = g + 1
    targets = {(q, r), (big - q, big - r)}
    if x == y:
        zs = nbrs.get(x, ())
        cands = [cover(z, s) for z in zs for s in (1, -1)]
    else:
        zs = third.get((min(x, y), max(x, y)), ())
        cands = [cover(z, s) for z in zs for s in (1, -1)]
        cands += [cover(x, -1), cover(y, -base_of(yc)[1])]
    for zc in cands:
        got = (_lifted_weight(w, g, zc, xc), _lifted_weight(w, g, zc, yc))
        if got in targets:
            z, s = base_of(zc)
            return cover(z, s * sx)
    return None


def lift_certificate(c: Certificate) -> Certificate:
    """Certificate for ``(edc(base), g + 1)`` built from one for ``(base, g)``.

    Rungs get weight g, each distance edge ``uv`` of weight w lifts to straight
    edges of weight w and crossing edges of weight g - w, and the triangle set
    is every triangle of the lifted graph. Raises TheoremViolation if the
    result fails to verify.
    """
    c.validate()
    g = c.g
    w = c.tset.weights
    dist_edges = c.dist_graph.edges
    verts = sorted({x for u, v, _ in dist_edges for x in (u, v)}) or list(range(c.base.n))
    edges = [(cover(v, 1), cover(v, -1), g) for v in verts]
    for u, v, x in dist_edges:
        edges += [
            (cover(u, 1), cover(v, 1), x),
            (cover(u, -1), cover(v, -1), x),
            (cover(u, 1), cover(v, -1), g - x),
            (cover(u, -1), cover(v, 1), g - x),
        ]
    host = WeightedSignedGraph(2 * c.base.n, edges)
    lifted = Certificate(edc(c.base), g + 1, TriangleSet(host, all_triangles(host)))
    errs = lifted.problems()
    if errs:
        raise TheoremViolation("lifted certificate fails: " + "; ".join(errs[:10]))

    third = defaultdict(list)
    for t in sorted(c.tset.triangles):
        for a, b in combinations(t, 2):
            (z,) = set(t) - {a, b}
            third[(a, b)].append(z)
    nbrs = defaultdict(list)
    for u, v, _ in dist_edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    need = defaultdict(list)
    for p, q, r in sorted(positive_Lg(g + 1)):
        need[p].append((q, r))
    lw = lifted.tset.weights
    for a, b in sorted(lifted.tset.edge_set):
        for xc, yc in ((a, b), (b, a)):
            for q, r in need[lw[(xc, yc)]]:
                zc = _proof_witness(w, third, nbrs, g, xc, yc, q, r)
                got = None if zc is None else (lw.get((zc, xc)), lw.get((zc, yc)))
                if got not in ((q, r), (g + 1 - q, g + 1 - r)):
                    raise TheoremViolation(
                        f"no witness for lifted edge {xc}-{yc} and triple {(lw[(xc, yc)], q, r)}"
                    )
    return lifted


def cover_algebraic_distances(p: int, g: int) -> tuple:
    """Predicted ``(ad(x+, y+), ad(x+, y-), branch)`` in the double cover for a
    pair with ``ad(x, y) = p`` on a common negative g-cycle of a g-wide graph.

    ``x-, y-`` matches ``x+, y+`` and ``x-, y+`` matches ``x+, y-``. The
    branch is one of ``"pos-half"``, ``"pos"``, ``"neg-half"``, ``"neg"``,
    where the ``-half`` variants are the pairs at distance ``g // 2``.
    """
    half = g // 2
    if p == 0 or abs(p) > half:
        raise GraphError(f"ad={p} impossible for a pair on a negative {g}-cycle")
    if p > 0:
        if p == half:
            return p, g - p, "pos-half"
        return p, -p - 1, "pos"
    if -p == half:
        return g + p, -p, "neg-half"
    return p - 1, -p, "neg"
