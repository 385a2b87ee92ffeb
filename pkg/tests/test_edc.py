import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import bfs_dist, random_signed_graph, random_wide_graph
from sgh.core import NEG, POS, GraphError, SignedGraph, digon, negative_cycle, negative_loop, switch
from sgh.core import walk_girths
from sgh.distance import negative_g_cycle_pairs, pair_on_negative_g_cycle
from sgh.edc import (
    Walk,
    base_of,
    check_walk,
    cover,
    edc,
    edc_weighted,
    lift_walk,
    minus,
    plus,
    spc,
    spc_cover_bijection,
    walk_from_vertices,
    walk_sign,
)
from sgh.weighted import WeightedSignedGraph, weighted_walk_girths


def inc(x):
    return x + 1


class TestEdc:
    def test_numbering(self):
        assert (plus(3), minus(3)) == (6, 7)
        assert base_of(7) == (3, NEG) and base_of(6) == (3, POS)
        assert cover(3, NEG) == 7

    def test_negative_four_cycle_is_mobius_ladder(self):
        h = edc(negative_cycle(4))
        assert (h.n, h.m) == (8, 12)
        assert sum(s < 0 for _, _, s in h.edges) == 4
        # cubic and connected: the rungs plus one long 8-cycle
        assert all(len(a) == 3 for a in h.adjacency())
        assert h.is_connected()

    def test_digon_gives_spc2(self):
        assert edc(digon()).relabel(spc_cover_bijection(2)) == spc(2)

    def test_single_vertex(self):
        assert edc(SignedGraph(1)).edges == ((0, 1, NEG),)

    def test_negative_loop_gives_digon(self):
        assert edc(negative_loop()) == SignedGraph(2, [(0, 1, POS), (0, 1, NEG)])

    def test_positive_loop(self):
        h = edc(SignedGraph(1, [(0, 0, POS)]))
        assert (0, 0, POS) in h.edges and (1, 1, POS) in h.edges

    def test_weighted_rules(self):
        h = edc_weighted(WeightedSignedGraph(2, [(0, 1, 2)]))
        ws = sorted(w for u, v, w in h.edges if base_of(u)[0] != base_of(v)[0])
        assert ws == [-3, -3, 2, 2]
        h = edc_weighted(WeightedSignedGraph(2, [(0, 1, -1)]))
        straight = sorted(w for u, v, w in h.edges if u // 2 != v // 2 and u % 2 == v % 2)
        crossing = sorted(w for u, v, w in h.edges if u // 2 != v // 2 and u % 2 != v % 2)
        assert straight == [-2, -2] and crossing == [1, 1]

    @given(st.integers(2, 7), st.integers(0, 10**6), st.data())
    @settings(max_examples=40, deadline=None)
    def test_commutes_with_switching(self, n, seed, data):
        g = random_signed_graph(n, random.Random(seed))
        xs = data.draw(st.sets(st.integers(0, n - 1)))
        # switching at v is exchanging v+ and v- in the cover
        swap = [x ^ 1 if base_of(x)[0] in xs else x for x in range(2 * n)]
        assert edc(switch(g, xs)).relabel(swap) == edc(g)


class TestCoverGirths:
    @given(st.integers(2, 8), st.integers(0, 10**6))
    @settings(max_examples=80, deadline=None)
    def test_signed(self, n, seed):
        g = random_signed_graph(n, random.Random(seed))
        a, b = walk_girths(g), walk_girths(edc(g))
        assert b.g01 == a.g01
        assert b.g10 == inc(a.g11)
        assert b.g11 == inc(a.g10)

    @given(st.integers(2, 6), st.integers(0, 10**6))
    @settings(max_examples=40, deadline=None)
    def test_weighted(self, n, seed):
        rng = random.Random(seed)
        base = random_signed_graph(n, rng, p=0.3)
        g = WeightedSignedGraph(n, [(u, v, s * rng.randint(1, 4)) for u, v, s in base.edges])
        a, b = weighted_walk_girths(g), weighted_walk_girths(edc_weighted(g))
        assert b.g01 == a.g01
        assert b.g10 == inc(a.g11)
        assert b.g11 == inc(a.g10)


class TestSpc:
    def test_spc1_is_digon(self):
        assert spc(1) == digon()

    def test_spc2_counts(self):
        g = spc(2)
        assert g.n == 4
        assert sum(s > 0 for *_, s in g.edges) == 4
        assert sum(s < 0 for *_, s in g.edges) == 2

    @pytest.mark.parametrize("k", range(2, 7))
    def test_inductive_form(self, k):
        perm = spc_cover_bijection(k)
        assert sorted(perm) == list(range(1 << k))
        assert edc(spc(k - 1)).relabel(perm).edges == spc(k).edges

    def test_bad_dimension(self):
        with pytest.raises(GraphError):
            spc(0)
        with pytest.raises(GraphError):
            spc_cover_bijection(1)


class TestLiftWalk:
    def test_positive_back_and_forth(self):
        g = negative_cycle(4)
        w = walk_from_vertices(g, [0, 1, 0, 1, 0])
        lifted = lift_walk(g, w)
        assert len(lifted) == 4 and lifted.closed and lifted.vertices[0] == plus(0)

    def test_negative_cycle_gains_rung(self):
        g = negative_cycle(4)
        w = walk_from_vertices(g, [0, 1, 2, 3, 0])
        h = edc(g)
        lifted = lift_walk(g, w, cover_graph=h)
        assert len(lifted) == 5 and lifted.closed
        assert walk_sign(h, lifted) == NEG
        check_walk(h, lifted)

    def test_lift_then_reverse_doubles(self):
        g = negative_cycle(5)
        h = edc(g)
        path = [0, 1, 2, 3]
        a = lift_walk(g, walk_from_vertices(g, path), cover_graph=h)
        end_side = base_of(a.vertices[-1])[1]
        b = lift_walk(g, walk_from_vertices(g, path[::-1]), start_sign=end_side, cover_graph=h)
        joined = Walk(a.vertices + b.vertices[1:], a.edges + b.edges)
        check_walk(h, joined)
        assert joined.closed and len(joined) == 2 * len(path) - 2

    def test_invalid_walk(self):
        g = negative_cycle(4)
        with pytest.raises(GraphError):
            walk_from_vertices(g, [0, 2])
        with pytest.raises(GraphError):
            check_walk(g, Walk((0, 1), (2,)))

    def test_walk_observation(self):
        # a p-walk of sign s lifts to same-side walks of sign s and length p,
        # and to other-side walks of sign -s and length p + 1
        rng = random.Random(4)
        for _ in range(30):
            g = random_signed_graph(6, rng)
            h = edc(g)
            verts = [rng.randrange(g.n)]
            for _ in range(rng.randint(1, 6)):
                verts.append(rng.choice(g.adjacency()[verts[-1]])[0])
            if verts[0] == verts[-1]:
                continue  # closed walks get the closing rung, tested above
            w = walk_from_vertices(g, verts)
            s = walk_sign(g, w)
            for start in (POS, NEG):
                up = lift_walk(g, w, start_sign=start, cover_graph=h)
                end = up.vertices[-1]
                assert walk_sign(h, up) == POS and len(up) == len(w)
                assert base_of(end)[1] == start * s
                # extend by the rung at the end to reach the other side
                other = cover(verts[-1], -start * s)
                assert bfs_dist(h, end)[other] == 1


class TestCycleLift:
    @pytest.mark.parametrize("g", [4, 5, 6])
    def test_negative_cycle_pairs_lift(self, g):
        for seed in range(4):
            base = random_wide_graph(g, seed, ears=3)
            h = edc(base)
            for x, y in sorted(negative_g_cycle_pairs(base, g))[:12]:
                for a in (plus(x), minus(x)):
                    for b in (plus(y), minus(y)):
                        assert pair_on_negative_g_cycle(h, a, b, g + 1)
