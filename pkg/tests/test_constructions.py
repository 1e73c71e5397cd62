import random

import pytest

from oracles import brute_min_codegree
from tightcc import DegenerateInstance, has_spanning_component, min_codegree
from tightcc.colouring import (
    class_sizes,
    covered_by_colour,
    max_pair_colour_count,
    monochromatic_quadruples,
    spanning_colours,
)
from tightcc.configsearch import canonical_colouring, canonical_form, is_r_configuration
from tightcc.constructions import (
    CLUSTER_TABLE,
    balanced_parts,
    cluster_sizes,
    gen_abundant,
    gen_config5,
    gen_config6,
    gen_H,
    gen_Hprime,
    v1_v3_v4_triple,
    verify_abundant,
)
from tightcc.link2 import vertex_view


class TestParts:
    @pytest.mark.parametrize("n", range(8, 30))
    def test_balanced_ascending_contiguous(self, n):
        parts = balanced_parts(n)
        sizes = [parts.count(i) for i in range(1, 5)]
        assert sizes == sorted(sizes) and sizes[-1] - sizes[0] <= 1
        assert list(parts) == sorted(parts)

    def test_n17(self):
        assert gen_H(17).part_sizes() == (4, 4, 4, 5)


class TestH:
    def test_n8_quadruple_0123_not_an_edge(self):
        g = gen_H(8)
        assert g.part_of == (1, 1, 2, 2, 3, 3, 4, 4)
        assert (0, 1, 2, 3) not in g.hypergraph

    @pytest.mark.parametrize("n", [8, 11, 16])
    def test_congruence(self, n):
        g = gen_H(n)
        from itertools import combinations

        for q in combinations(range(n), 4):
            assert (q in g.hypergraph) == (sum(g.part_of[v] for v in q) % 4 == 1)

    def test_n16_not_spanning(self):
        assert has_spanning_component(gen_H(16).hypergraph)[0] is False

    def test_n16_min_codegree(self):
        h = gen_H(16).hypergraph
        assert min_codegree(h) == (2, (0, 1, 4))
        assert brute_min_codegree(16, 4, h.edges)[0] == 2

    def test_too_small(self):
        with pytest.raises(DegenerateInstance):
            gen_H(7)
        with pytest.raises(DegenerateInstance):
            gen_Hprime(5)


class TestHprime:
    def test_n16(self):
        g = gen_Hprime(16)
        value, _ = min_codegree(g.hypergraph)
        assert value == 3
        t = v1_v3_v4_triple(g)
        assert [g.part_of[v] for v in t] == [1, 3, 4]
        cod = sum(1 for d in range(16) if d not in t and tuple(sorted(t + (d,))) in g.hypergraph)
        assert cod == 3

    def test_n17(self):
        assert min_codegree(gen_Hprime(17).hypergraph)[0] == 3

    @pytest.mark.parametrize("n", [8, 13, 16, 21])
    def test_contains_H(self, n):
        assert set(gen_H(n).hypergraph.edges) <= set(gen_Hprime(n).hypergraph.edges)

    def test_extra_edges_have_paired_labels(self):
        g, h = gen_Hprime(12), gen_H(12)
        extra = set(g.hypergraph.edges) - set(h.hypergraph.edges)
        assert extra
        for e in extra:
            labels = sorted(g.part_of[v] for v in e)
            assert labels[0] == labels[1] and labels[2] == labels[3]
            assert (labels[2] - labels[0]) % 4 in (1, 3)

    @pytest.mark.parametrize("n", [12, 16])
    def test_invariant_under_intra_part_permutation(self, n):
        rnd = random.Random(n)
        g = gen_Hprime(n)
        for _ in range(5):
            perm = list(range(n))
            for i in range(1, 5):
                block = g.part(i)
                shuffled = block[:]
                rnd.shuffle(shuffled)
                for a, b in zip(block, shuffled):
                    perm[a] = b
            assert g.hypergraph.relabel(perm) == g.hypergraph


class TestConfigurations:
    def test_config5(self):
        c = gen_config5()
        assert is_r_configuration(c) == (True, None)
        assert sorted(class_sizes(c).values()) == [2] * 5
        assert spanning_colours(c) == set()

    def test_config5_class_missing_vertex(self):
        c = gen_config5()
        # vertex 1 is the one missed by colour 1; its class is a tight path
        assert {t for t, col in c.items() if col == 1} == {(2, 3, 4), (0, 2, 3)}
        for col, vs in covered_by_colour(c).items():
            assert vs == set(range(5)) - {col}

    def test_config6(self):
        c = gen_config6()
        assert is_r_configuration(c) == (True, None)
        assert sorted(class_sizes(c).values()) == [3, 3, 3, 3, 3, 5]
        assert max_pair_colour_count(c)[0] == 3
        assert monochromatic_quadruples(c) == []
        for col, vs in covered_by_colour(c).items():
            assert len(vs) == 5 and col not in vs

    def test_config6_cycle(self):
        cycle = {t for t, col in gen_config6().items() if col == 5}
        assert cycle == {(0, 1, 2), (1, 2, 3), (2, 3, 4), (0, 3, 4), (0, 1, 4)}

    @pytest.mark.parametrize("gen", [gen_config5, gen_config6])
    def test_canonicalization_fixed_point(self, gen):
        c = gen()
        rep = canonical_colouring(c)
        assert canonical_form(rep) == canonical_form(c)
        assert canonical_colouring(rep) == rep


class TestAbundant:
    def test_table_symmetric(self):
        for a in range(7):
            for b in range(7):
                if a != b:
                    assert CLUSTER_TABLE[a][b] == CLUSTER_TABLE[b][a]

    def test_sizes(self):
        assert cluster_sizes(1) == (9, 5, 5, 5, 5, 5, 5)
        assert sum(cluster_sizes(2)) == 71

    @pytest.mark.parametrize("m", [1, 2])
    def test_colour_profile(self, m):
        c = gen_abundant(m)
        big = cluster_sizes(m)[0]
        for v in range(c.n):
            assert len(vertex_view(c, v).incident_colours) == (2 if v < big else 3)

    @pytest.mark.parametrize("m", [1, 2])
    @pytest.mark.parametrize("scheme", ["circulant", "swapped", "alternating"])
    def test_intra_degrees(self, m, scheme):
        c = gen_abundant(m, scheme=scheme)
        sizes = cluster_sizes(m)
        start = 0
        for a, size in enumerate(sizes):
            block = range(start, start + size)
            for v in block:
                degs = {}
                for u in block:
                    if u != v:
                        col = c.colour((u, v))
                        degs[col] = degs.get(col, 0) + 1
                assert sorted(degs.values()) == [(size - 1) // 2] * 2
            start += size

    def test_verify_catches_a_broken_colouring(self):
        from tightcc.constructions import VerificationFailed

        c = gen_abundant(1)
        broken = c.recolour({0: 1})
        with pytest.raises(VerificationFailed):
            verify_abundant(broken, 1)
