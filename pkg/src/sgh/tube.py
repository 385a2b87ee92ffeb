"""The cylinder T(g) and the twisted tube (TT(g), J).

With ``h = g // 2`` and ``k = (g + 1) // 2`` the tube has columns
``0..2h-1`` and rows ``0..k-1``; vertex ``(i, j)`` has id ``i * k + j``.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import NamedTuple

from .core import NEG, POS, GraphError, SignedGraph, switch
from .distance import Certificate, TheoremViolation, TriangleSet, all_triangles, is_g_closed
from .weighted import WeightedSignedGraph, positive_Lg


class TubeCoord(NamedTuple):
    i: int
    j: int


def dims(g: int) -> tuple:
    if g < 2:
        raise GraphError("the tube needs g >= 2")
    return g // 2, (g + 1) // 2


def order(g: int) -> int:
    h, k = dims(g)
    return 2 * h * k


def vid(c, g: int) -> int:
    h, k = dims(g)
    i, j = c
    if not (0 <= i < 2 * h and 0 <= j < k):
        raise GraphError(f"coordinate {tuple(c)} outside the g={g} tube")
    return i * k + j


def coord(v: int, g: int) -> TubeCoord:
    h, k = dims(g)
    if not 0 <= v < 2 * h * k:
        raise GraphError(f"vertex {v} outside the g={g} tube")
    return TubeCoord(*divmod(v, k))


def coords(g: int) -> list:
    return [coord(v, g) for v in range(order(g))]


def _cylinder_edges(g):
    h, k = dims(g)
    edges = []
    for i in range(2 * h):
        for j in range(k):
            if j + 1 < k:
                edges.append((vid((i, j), g), vid((i, j + 1), g), POS))
            # two columns: both horizontal rules give the same edge, collapsed on construction
            edges.append((vid((i, j), g), vid(((i + 1) % (2 * h), j), g), POS))
    return edges


def build_cylinder(g: int) -> SignedGraph:
    """C_{2h} x P_k with every edge positive."""
    return SignedGraph(order(g), _cylinder_edges(g), f"T({g})")


def tube_distance_parts(u, v, g: int) -> tuple:
    """``(d_plus, d_minus)``: shortest paths avoiding / using a wrap edge."""
    h, k = dims(g)
    vid(u, g)
    vid(v, g)
    di, dj = abs(u[0] - v[0]), abs(u[1] - v[1])
    return di + dj, 2 * h - di + dj


def tube_distance(u, v, g: int) -> int:
    return min(tube_distance_parts(u, v, g))


def antipodal_pairs(g: int) -> list:
    """Vertex pairs at cylinder distance ``g - 1``, the diameter."""
    h, k = dims(g)
    cs = coords(g)
    out = [
        (vid(u, g), vid(v, g))
        for u, v in combinations(cs, 2)
        if tube_distance(u, v, g) == h + k - 1
    ]
    expect = 2 * h if k > 1 else h
    if len(out) != expect:
        raise TheoremViolation(f"found {len(out)} antipodal pairs, expected {expect}")
    for a, b in out:
        u, v = coord(a, g), coord(b, g)
        if (u[1], v[1]) not in ((0, k - 1), (k - 1, 0)) or (u[0] - v[0]) % (2 * h) != h:
            raise TheoremViolation(f"antipodal pair {u}, {v} is not a column shift by {h}")
    return out


def build_twisted_tube(g: int) -> SignedGraph:
    """The cylinder with a negative edge joining each antipodal pair."""
    edges = _cylinder_edges(g) + [(u, v, NEG) for u, v in antipodal_pairs(g)]
    return SignedGraph(order(g), edges, f"TT({g})")


def tube_distance_graph(g: int) -> WeightedSignedGraph:
    """Complete graph on the tube weighted by cylinder distance."""
    cs = coords(g)
    edges = [
        (vid(u, g), vid(v, g), tube_distance(u, v, g)) for u, v in combinations(cs, 2)
    ]
    return WeightedSignedGraph(order(g), edges)


def _edge_label(u, v, g):
    """Coordinate mask of a tube edge (bit ``t - 1`` stands for e_t)."""
    h, k = dims(g)
    (i1, j1), (i2, j2) = u, v
    full = (1 << (g - 1)) - 1
    if i1 == i2:
        return 1 << (h + max(j1, j2) - 1)
    if j1 == j2 and (i1 - i2) % (2 * h) in (1, 2 * h - 1):
        lo, hi = min(i1, i2), max(i1, i2)
        if lo == 0 and hi == 2 * h - 1 and h > 1:
            return 1 << (h - 1)
        t = hi if hi <= h else hi - h
        return 1 << (t - 1)
    return full


def spc_embedding(g: int) -> list:
    """Image of every tube vertex in Z_2^{g-1}: XOR of edge labels along a path from (0, 0).

    Raises TheoremViolation unless the map is well defined and injective.
    """
    tt = build_twisted_tube(g)
    phi = [None] * tt.n
    phi[0] = 0
    adj = tt.adjacency()
    stack = [0]
    while stack:
        v = stack.pop()
        for w, _, idx in adj[v]:
            if phi[w] is None:
                phi[w] = phi[v] ^ _edge_label(coord(v, g), coord(w, g), g)
                stack.append(w)
    for u, v, s in tt.edges:
        if s > 0:
            label = _edge_label(coord(u, g), coord(v, g), g)
        else:
            label = (1 << (g - 1)) - 1
        if phi[u] ^ phi[v] != label:
            raise TheoremViolation(f"labels not path independent at edge {u}-{v}")
    if len(set(phi)) != len(phi):
        raise TheoremViolation("embedding is not injective")
    return phi


def _shift_map(v1, v2, g):
    h, k = dims(g)
    di, dj = v2[0] - v1[0], v2[1] - v1[1]
    perm = []
    for i, j in coords(g):
        if j <= k - 1 - dj:
            img = ((i + di) % (2 * h), j + dj)
        else:
            img = ((i + h + di) % (2 * h), (j + dj) % k)
        perm.append(vid(img, g))
    switching = frozenset(v for v in range(order(g)) if coord(v, g)[1] >= dj)
    if dj == 0:
        switching = frozenset()
    return perm, switching


def tube_automorphism(v1, v2, g: int) -> tuple:
    """``(perm, X)`` with ``perm[vid(v1)] == vid(v2)`` such that relabelling
    TT(g) by ``perm`` and switching at ``X`` gives TT(g) back.

    Row shifts downward use the inverse of the upward map.
    """
    vid(v1, g)
    vid(v2, g)
    if v2[1] >= v1[1]:
        return _shift_map(v1, v2, g)
    perm, switching = _shift_map(v2, v1, g)
    inv = [0] * len(perm)
    for v, w in enumerate(perm):
        inv[w] = v
    return inv, frozenset(inv[x] for x in switching)


def is_signed_automorphism(g: int, perm, switching) -> bool:
    tt = build_twisted_tube(g)
    return sorted(perm) == list(range(tt.n)) and switch(tt.relabel(perm), switching) == tt


def triangle_completion(g: int, p: int, q: int, r: int, a: int, b: int) -> TubeCoord:
    """Third vertex z for x = (0, 0), y = (a, b) with distances (q, r) or (g - q, g - r)."""
    return completion_case(g, p, q, r, a, b)[0]


def completion_case(g: int, p: int, q: int, r: int, a: int, b: int) -> tuple:
    """``(z, case)`` where case names the branch of the split on r that fired:
    ``"i-a"`` (b >= q), ``"i-b"`` (b < q), ``"i-b-row"``, ``"ii"`` or ``"iii"``.

    ``"i-b-row"`` covers even g with q = g / 2 and r = a + q - b, where the
    i-b formula gives row g / 2, one past the last row. There g - q = q and
    g - r = g / 2 - a + b, which (g / 2, 0) realises.

    Raises TheoremViolation if no branch applies or the vertex is wrong.
    """
    h, k = dims(g)
    if not (1 <= min(p, q, r) and max(p, q, r) <= g - 1 and (p, q, r) in positive_Lg(g)):
        raise GraphError(f"({p}, {q}, {r}) is not a positive g-wide triple for g={g}")
    if not (q <= h and 0 <= a <= h and 0 <= b <= k - 1 and a + b == p):
        raise GraphError(f"completion precondition fails for a={a}, b={b}, q={q}")

    def half(x):
        if x % 2:
            raise TheoremViolation(f"odd numerator {x} for g={g}, {(p, q, r, a, b)}")
        return x // 2

    if abs(a + b - q) <= r <= a + abs(b - q):
        if b >= q:
            c, d, case = 0, q, "i-a"
        else:
            c, d, case = half(a - b + q - r), half(q + r - a + b), "i-b"
            if d == k and 2 * q == g:
                c, d, case = h, 0, "i-b-row"
    elif a + abs(b - q) + 2 <= r <= min(2 * h + b - a - q, a + b + q, 2 * g - a - b - q):
        c, d, case = 2 * h + half(a + b - q - r), half(a + b + q - r), "ii"
    elif 2 * h + b - a - q + 2 <= r <= min(a + b + q, 2 * g - a - b - q):
        c, d, case = half(a - b - q + r), g - half(a - b + q + r), "iii"
    else:
        raise TheoremViolation(f"no completion case applies to g={g}, {(p, q, r, a, b)}")
    if not (0 <= c < 2 * h and 0 <= d < k):
        raise TheoremViolation(f"completion ({c}, {d}) off the tube for {(g, p, q, r, a, b)}")
    got = (tube_distance((c, d), (0, 0), g), tube_distance((c, d), (a, b), g))
    if got not in ((q, r), (g - q, g - r)):
        raise TheoremViolation(f"completion ({c}, {d}) has distances {got} for {(g, p, q, r, a, b)}")
    return TubeCoord(c, d), case


def completion_witness(g: int, x: int, y: int, q: int, r: int, autos=None) -> tuple:
    """``(z, case)``: third vertex for the ordered edge ``x y`` and triple
    ``(d(x, y), q, r)``, and the completion branch that produced it.

    Moves x to the origin with a tube automorphism, reflects columns so y
    sits at column <= g // 2, trades (q, r) for (g - q, g - r) when q > g // 2,
    completes there and maps back.
    """
    h, k = dims(g)
    perm, switching = autos[x] if autos else tube_automorphism(coord(x, g), (0, 0), g)
    flip = {v: perm[v] in switching for v in (x, y)}

    def tilde(val, flipped):
        return g - val if flipped else val

    p = tube_distance(coord(x, g), coord(y, g), g)
    pt = tilde(p, flip[x] != flip[y])
    qt, rt = tilde(q, flip[x]), tilde(r, flip[y])
    ya, yb = coord(perm[y], g)
    reflect = ya > h
    if reflect:
        ya = (-ya) % (2 * h)
    if qt > h:
        qt, rt = g - qt, g - rt
    (c, d), case = completion_case(g, pt, qt, rt, ya, yb)
    if reflect:
        c = (-c) % (2 * h)
    return perm.index(vid((c, d), g)), case


def _sweep_chunk(args):
    g, xs = args
    need = {}
    for p, q, r in sorted(positive_Lg(g)):
        need.setdefault(p, []).append((q, r))
    cs = coords(g)
    cases = Counter()
    for x in xs:
        autos = {x: tube_automorphism(cs[x], (0, 0), g)}
        for y in range(len(cs)):
            if y == x:
                continue
            p = tube_distance(cs[x], cs[y], g)
            for q, r in need.get(p, ()):
                z, case = completion_witness(g, x, y, q, r, autos)
                got = (tube_distance(cs[z], cs[x], g), tube_distance(cs[z], cs[y], g))
                if z in (x, y) or got not in ((q, r), (g - q, g - r)):
                    raise TheoremViolation(
                        f"witness {cs[z]} fails for edge {cs[x]}-{cs[y]}, triple {(p, q, r)}"
                    )
                cases[case] += 1
    return cases


def completion_sweep(g: int, threads: int = 1) -> Counter:
    """Find a completing vertex for every ordered tube pair and every
    positive triple of L_g; returns how often each branch fired."""
    n = order(g)
    chunks = [(g, list(range(s, n, max(threads, 1)))) for s in range(max(threads, 1))]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return sum(pool.map(_sweep_chunk, chunks), Counter())
    return sum(map(_sweep_chunk, chunks), Counter())


def tube_certificate(g: int) -> Certificate:
    """Every pair weighted by cylinder distance, every triangle kept."""
    host = tube_distance_graph(g)
    return Certificate(build_twisted_tube(g), g, TriangleSet(host, all_triangles(host)))


def verify_tube_certificate(g: int, threads: int = 1) -> Certificate:
    """Build the tube certificate and check closure two ways: the generic
    closure test and the explicit completion sweep."""
    cert = tube_certificate(g)
    errs = cert.problems()
    if errs:
        raise TheoremViolation(f"tube certificate for g={g} invalid: " + "; ".join(errs[:10]))
    if g >= 3:
        if is_g_closed(cert.tset, g):
            raise TheoremViolation(f"tube triangle set for g={g} is not closed")
        cases = completion_sweep(g, threads)
        cert.trace["completion_cases"] = dict(sorted(cases.items()))
        cert.trace["completions_checked"] = sum(cases.values())
    return cert
