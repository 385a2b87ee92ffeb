import random

import pytest

from helpers import bfs_dist
from sgh.core import NEG, GraphError, class_of, C10, C11, walk_girths, negative_cycle_girths
from sgh.distance import algebraic_distance, f_g_transform
from sgh.edc import spc
from sgh.tube import (
    antipodal_pairs,
    build_cylinder,
    build_twisted_tube,
    completion_case,
    completion_sweep,
    completion_witness,
    coord,
    coords,
    dims,
    is_signed_automorphism,
    order,
    spc_embedding,
    tube_automorphism,
    tube_certificate,
    tube_distance,
    tube_distance_parts,
    verify_tube_certificate,
    vid,
)
from sgh.weighted import positive_Lg


class TestShape:
    @pytest.mark.parametrize("g", range(2, 11))
    def test_order_and_edges(self, g):
        h, k = dims(g)
        tt = build_twisted_tube(g)
        assert tt.n == order(g) == g * g // 2
        assert sum(s == NEG for *_, s in tt.edges) == (2 * h if k > 1 else h)

    def test_small_cases(self):
        # g = 2 collapses to a digon, g = 3 to a four-cycle plus two chords
        assert walk_girths(build_twisted_tube(2)) == negative_cycle_girths(2)
        tt3 = build_twisted_tube(3)
        assert tt3.n == 4 and walk_girths(tt3) == (2, float("inf"), float("inf"), 3)

    @pytest.mark.parametrize("g", range(3, 10))
    def test_girths_and_class(self, g):
        tt = build_twisted_tube(g)
        assert walk_girths(tt) == negative_cycle_girths(g)
        assert class_of(tt) == (C10 if g % 2 == 0 else C11)

    def test_cylinder_distance_is_bfs(self):
        for g in range(3, 10):
            cyl = build_cylinder(g)
            for u in range(cyl.n):
                row = bfs_dist(cyl, u)
                for v in range(cyl.n):
                    assert row[v] == tube_distance(coord(u, g), coord(v, g), g)

    def test_parts(self):
        assert tube_distance_parts((0, 0), (3, 2), 8) == (5, 7)

    def test_coordinates(self):
        assert vid((2, 1), 6) == 7 and coord(7, 6) == (2, 1)
        assert len(coords(7)) == order(7)
        with pytest.raises(GraphError):
            vid((6, 0), 6)
        with pytest.raises(GraphError):
            coord(18, 6)
        with pytest.raises(GraphError):
            dims(1)

    @pytest.mark.parametrize("g", range(3, 10))
    def test_antipodes_have_diameter(self, g):
        for u, v in antipodal_pairs(g):
            assert tube_distance(coord(u, g), coord(v, g), g) == g - 1


class TestAutomorphisms:
    @pytest.mark.parametrize("g", range(3, 8))
    def test_every_pair(self, g):
        cs = coords(g)
        for a in cs:
            for b in cs:
                perm, xs = tube_automorphism(a, b, g)
                assert perm[vid(a, g)] == vid(b, g)
                assert is_signed_automorphism(g, perm, xs)

    def test_distance_preserved_up_to_complement(self):
        g = 7
        perm, xs = tube_automorphism((1, 2), (0, 0), g)
        cs = coords(g)
        for u in range(len(cs)):
            for v in range(u + 1, len(cs)):
                d = tube_distance(cs[u], cs[v], g)
                e = tube_distance(cs[perm[u]], cs[perm[v]], g)
                assert e == (g - d if (u in xs) != (v in xs) else d)


class TestEmbedding:
    @pytest.mark.parametrize("g", range(2, 10))
    def test_injective_homomorphism(self, g):
        phi = spc_embedding(g)
        target = spc(g - 1)
        edges = {(min(u, v), max(u, v), s) for u, v, s in target.edges}
        tt = build_twisted_tube(g)
        for u, v, s in tt.edges:
            a, b = phi[u], phi[v]
            assert (min(a, b), max(a, b), s) in edges


class TestCompletion:
    def test_known_case(self):
        z, case = completion_case(6, 3, 2, 3, 2, 1)
        assert tube_distance(z, (0, 0), 6) in (2, 4)
        assert case in {"i-a", "i-b", "i-b-row", "ii", "iii"}

    def test_row_branch(self):
        # g = 4, x = (0, 0), y = (1, 1): the plain i-b formula lands on row 2
        z, case = completion_case(4, 2, 2, 2, 1, 1)
        assert case == "i-b-row" and z == (2, 0)

    def test_preconditions(self):
        with pytest.raises(GraphError):
            completion_case(6, 3, 2, 3, 4, 1)
        with pytest.raises(GraphError):
            completion_case(6, 1, 1, 1, 1, 0)

    @pytest.mark.parametrize("g", range(3, 9))
    def test_sweep(self, g):
        cases = completion_sweep(g)
        assert sum(cases.values()) > 0

    def test_threads_agree(self):
        assert completion_sweep(7, threads=2) == completion_sweep(7)

    def test_witness_random(self):
        rng = random.Random(5)
        g = 8
        triples = sorted(positive_Lg(g))
        cs = coords(g)
        for _ in range(200):
            x, y = rng.sample(range(len(cs)), 2)
            p = tube_distance(cs[x], cs[y], g)
            choices = [(q, r) for pp, q, r in triples if pp == p]
            if not choices:
                continue
            q, r = rng.choice(choices)
            z, _ = completion_witness(g, x, y, q, r)
            got = (tube_distance(cs[z], cs[x], g), tube_distance(cs[z], cs[y], g))
            assert got in ((q, r), (g - q, g - r))


class TestCertificate:
    @pytest.mark.parametrize("g", range(2, 9))
    def test_verify(self, g):
        cert = verify_tube_certificate(g)
        assert cert.problems() == []
        if g >= 3:
            assert cert.trace["completions_checked"] == sum(cert.trace["completion_cases"].values())

    def test_weights_are_transformed_distances(self):
        g = 7
        cert = tube_certificate(g)
        tt = cert.base
        for u, v, w in cert.dist_graph.edges:
            assert w == f_g_transform(algebraic_distance(tt, u, v), g)
