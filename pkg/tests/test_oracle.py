import random

import networkx as nx
import pytest
from figures import C5, FORBIDDEN_PRIMITIVE_6, NOT_CAT, P4, P5, P6, SUN3, TWO_P4, forbidden_primitive
from hypothesis import given
from strategies import graphs

from catprime.cograph import is_cograph
from catprime.exceptions import InputError
from catprime.generators import random_cograph
from catprime.graph import Graph, complement, edge_mask, graph_from_mask, is_module
from catprime.oracle import (
    CLASSES,
    CensusStats,
    Mismatch,
    brute_cat_prime,
    brute_cograph,
    brute_is_primitive,
    brute_polar_cat,
    brute_pseudo_cograph,
    enumerate_labeled_graphs,
    pseudo_cograph_witnesses,
    run_census,
)

# Exhaustive census counts per order; frozen from the brute-force oracles.
# The cograph column is the known count of labeled cographs.
CENSUS_COUNTS = {
    1: {"cograph": 1, "pseudo": 1, "polar_cat": 0, "cat_prime": 1},
    2: {"cograph": 2, "pseudo": 2, "polar_cat": 0, "cat_prime": 2},
    3: {"cograph": 8, "pseudo": 8, "polar_cat": 0, "cat_prime": 8},
    4: {"cograph": 52, "pseudo": 64, "polar_cat": 12, "cat_prime": 64},
    5: {"cograph": 472, "pseudo": 1012, "polar_cat": 180, "cat_prime": 1012},
    6: {"cograph": 5504, "pseudo": 22184, "polar_cat": 2880, "cat_prime": 24344},
}


def nx_graph(g):
    h = nx.Graph(g.edges())
    h.add_nodes_from(range(g.n))
    return h


class TestBrutePseudoCograph:
    def test_p4_every_vertex(self):
        assert brute_pseudo_cograph(P4)
        assert {w[0] for w in pseudo_cograph_witnesses(P4)} == {0, 1, 2, 3}

    def test_c5(self):
        assert not brute_pseudo_cograph(C5)

    def test_p5_middle_only(self):
        ws = pseudo_cograph_witnesses(P5)
        assert ws and {w[0] for w in ws} == {2}

    def test_small(self):
        assert brute_pseudo_cograph(Graph(2)) and pseudo_cograph_witnesses(Graph(2)) == []

    def test_guard(self):
        with pytest.raises(InputError):
            brute_pseudo_cograph(Graph(13))

    def test_cograph_witness_at_every_vertex(self):
        for n in range(3, 6):
            for g in enumerate_labeled_graphs(n):
                if brute_cograph(g):
                    ws = pseudo_cograph_witnesses(g)
                    assert len(ws) >= n
                    assert {w[0] for w in ws} == set(range(n))

    @given(graphs(min_n=3, max_n=8))
    def test_witnesses_satisfy_definition(self, g):
        for v, a, b, mode in pseudo_cograph_witnesses(g):
            assert set(a) | set(b) == set(range(g.n)) and set(a) & set(b) == {v}
            cross = [g.has_edge(x, y) for x in a if x != v for y in b if y != v]
            assert all(cross) if mode == "join" else not any(cross)


class TestBrutePolarCat:
    def test_p4(self):
        assert brute_polar_cat(P4)

    def test_sun_and_complement(self):
        assert not brute_polar_cat(SUN3)
        assert not brute_polar_cat(complement(SUN3))

    def test_polarizing_not_cat(self):
        assert not brute_polar_cat(NOT_CAT)

    def test_small(self):
        assert not brute_polar_cat(Graph(3, [(0, 1), (1, 2)]))

    def test_guard(self):
        with pytest.raises(InputError):
            brute_polar_cat(Graph(9))

    def test_members_are_primitive(self):
        rng = random.Random(8)
        found = 0
        for n in (4, 5, 6, 7):
            for _ in range(400):
                g = graph_from_mask(n, rng.getrandbits(n * (n - 1) // 2))
                if brute_polar_cat(g):
                    found += 1
                    assert brute_is_primitive(g)
        assert found > 0


class TestBruteCatPrime:
    def test_p6(self):
        assert not brute_cat_prime(P6)

    def test_two_p4(self):
        assert brute_cat_prime(TWO_P4)

    def test_cographs(self):
        for seed in range(20):
            assert brute_cat_prime(random_cograph(40, seed=seed))


class TestPrimitive:
    def test_p4(self):
        assert brute_is_primitive(P4)

    def test_p3(self):
        assert not brute_is_primitive(Graph(3, [(0, 1), (1, 2)]))

    @given(graphs(min_n=3, max_n=7))
    def test_agrees_with_module_scan(self, g):
        from itertools import combinations

        nontrivial = any(
            is_module(g, s) for k in range(2, g.n) for s in combinations(range(g.n), k)
        )
        assert brute_is_primitive(g) == (not nontrivial)


class TestForbiddenPrimitive:
    def test_each_is_primitive_and_not_pseudo(self):
        for g in forbidden_primitive():
            assert brute_is_primitive(g) and not brute_pseudo_cograph(g)
            assert not brute_cat_prime(g)

    def test_list_covers_every_class_once(self):
        reps = [nx_graph(graph_from_mask(6, m)) for m in FORBIDDEN_PRIMITIVE_6]
        for i in range(len(reps)):
            for j in range(i):
                assert not nx.is_isomorphic(reps[i], reps[j])
        count = 0
        for g in enumerate_labeled_graphs(6):
            if brute_is_primitive(g) and not brute_pseudo_cograph(g):
                count += 1
                h = nx_graph(g)
                assert any(nx.faster_could_be_isomorphic(h, r) and nx.is_isomorphic(h, r) for r in reps)
        assert count == 7920

    def test_contains_sun_and_paths(self):
        reps = [nx_graph(graph_from_mask(6, m)) for m in FORBIDDEN_PRIMITIVE_6]
        for g in (SUN3, complement(SUN3), P6):
            assert any(nx.is_isomorphic(nx_graph(g), r) for r in reps)

    def test_c5_is_the_only_one_on_five(self):
        masks = [g for g in enumerate_labeled_graphs(5) if brute_is_primitive(g) and not brute_pseudo_cograph(g)]
        assert len(masks) == 12
        assert all(nx.is_isomorphic(nx_graph(g), nx_graph(C5)) for g in masks)


class TestEnumerate:
    @pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (3, 8), (6, 32768)])
    def test_counts(self, n, count):
        assert sum(1 for _ in enumerate_labeled_graphs(n)) == count

    def test_mask_order(self):
        assert [edge_mask(g) for g in enumerate_labeled_graphs(3)] == list(range(8))

    def test_guard(self):
        with pytest.raises(InputError):
            list(enumerate_labeled_graphs(8))


class TestCensus:
    def test_counts_and_no_mismatches(self, census):
        for n, stats in census.items():
            assert stats.graphs == 1 << (n * (n - 1) // 2)
            assert stats.counts == CENSUS_COUNTS[n]
            assert stats.mismatches == []
            assert stats.failures == []

    def test_n4_polar_cats_are_the_p4_labelings(self, census):
        members = census[4].members["polar_cat"]
        assert len(members) == 12
        assert all(nx.is_isomorphic(nx_graph(graph_from_mask(4, m)), nx_graph(P4)) for m in members)

    def test_n5_c5_rejected_everywhere(self, census):
        c5 = [m for m in range(1 << 10) if nx.is_isomorphic(nx_graph(graph_from_mask(5, m)), nx_graph(C5))]
        assert len(c5) == 12
        for cls in ("pseudo", "polar_cat", "cat_prime"):
            assert not set(c5) & census[5].members[cls]

    def test_workers_agree(self):
        one = run_census(5, workers=1, record=True)
        two = run_census(5, workers=2, record=True)
        assert one.counts == two.counts and one.members == two.members

    def test_sampled(self):
        stats = run_census(7, sample=300, seed=1)
        assert stats.graphs == 300
        assert stats.mismatches == [] and stats.failures == []

    @pytest.mark.slow
    def test_sampled_n7_large(self):
        stats = run_census(7, sample=100_000, seed=7, checks=False)
        assert stats.graphs == 100_000
        assert stats.mismatches == []

    @pytest.mark.parametrize("kwargs", [{"n": 7}, {"n": 8, "sample": 5}, {"n": 0}])
    def test_guards(self, kwargs):
        with pytest.raises(InputError):
            run_census(**kwargs)

    def test_report_format(self):
        stats = CensusStats(5)
        stats.mismatches.append(Mismatch(0x3FF, "pseudo", "MEMBER", "NON_MEMBER"))
        assert stats.report_lines() == ["n=5 mask=0x3ff class=pseudo fast=MEMBER oracle=NON_MEMBER"]
        assert stats.summary().startswith("n=5 graphs=0 cograph=0")

    def test_merge(self):
        a = CensusStats(3, graphs=2, counts=dict.fromkeys(CLASSES, 1))
        b = CensusStats(3, graphs=3, counts=dict.fromkeys(CLASSES, 2))
        a.merge(b)
        assert a.graphs == 5 and a.counts == dict.fromkeys(CLASSES, 3)


def test_cograph_oracle_agrees_with_fast_test():
    for seed in range(10):
        g = random_cograph(12, seed=seed)
        assert brute_cograph(g) and is_cograph(g)
