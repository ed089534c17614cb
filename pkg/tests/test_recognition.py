import random

import pytest
from figures import (
    C5,
    CO_C5,
    GAMMA,
    GAMMA_WITNESSES,
    NON_PSEUDO,
    NOT_CAT,
    P4,
    P5,
    P6,
    PVR,
    SUN3,
    TWO_P4,
    forbidden_primitive,
)
from hypothesis import given, settings
from hypothesis import strategies as st
from strategies import graphs

from catprime.cograph import CatOrdering, is_cograph
from catprime.exceptions import InputError
from catprime.generators import random_elementary_network, random_pvr_network
from catprime.graph import (
    JOIN,
    UNION,
    Graph,
    complement,
    complete_graph,
    connected_components,
    diameter,
    gamma_graph,
    graph_from_mask,
    induced_subgraph,
    path_graph,
)
from catprime.modular import build_mdt, max_modular_partition, quotient
from catprime.network import (
    STRONG,
    contract_quasi_discriminating,
    cycles,
    evaluate,
    is_elementary,
    least_resolved,
    networks_isomorphic,
    validate,
)
from catprime.oracle import (
    brute_cat_prime,
    brute_cograph,
    brute_is_primitive,
    brute_polar_cat,
    brute_pseudo_cograph,
    pseudo_cograph_witnesses,
)
from catprime.recognition import (
    MEMBER,
    NON_MEMBER,
    PolarCatWitness,
    PseudoWitness,
    build_pseudo_network,
    count_strong_cycles_vs_prime_modules,
    explain_level1,
    is_well_proportioned,
    recognize_cograph,
    recognize_polar_cat,
    recognize_pseudo_cograph,
)


def witness_tuple(w):
    return (w.v, w.v1, w.v2, w.mode)


def unordered(witnesses):
    """Witness tuples with the two sides as an unordered pair."""
    return {(v, frozenset((a, b)), mode) for v, a, b, mode in witnesses}


def check_pseudo_witness(g, w):
    """F1-F3 from the definition, without the library's checker."""
    s1, s2 = set(w.v1), set(w.v2)
    assert s1 | s2 == set(range(g.n)) and s1 & s2 == {w.v}
    assert len(s1) > 1 and len(s2) > 1
    assert brute_cograph(induced_subgraph(g, s1)[0]) and brute_cograph(induced_subgraph(g, s2)[0])
    cross = [g.has_edge(a, b) for a in s1 - {w.v} for b in s2 - {w.v}]
    assert all(cross) if w.mode == JOIN else not any(cross)


def check_ordering(g, o, v):
    seq = o.sequence
    assert seq[-1] == v
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            assert g.has_edge(seq[i], seq[j]) == o.edge_expected(i, j)


def check_round_trip(g, network):
    net, t = network
    assert validate(net, t).valid
    assert evaluate(net, t) == g


def wp_witness(a, b):
    pw = PseudoWitness(0, tuple(range(a)), (0,) + tuple(range(a, a + b - 1)), UNION)
    return PolarCatWitness(pw, None, None)


class TestRecognizeCograph:
    def test_member_has_cotree(self):
        out = recognize_cograph(complete_graph(3))
        assert out.member and out.certificate.labels[out.certificate.root] == 1
        check_round_trip(complete_graph(3), out.network)

    def test_p4(self):
        assert recognize_cograph(P4).verdict == NON_MEMBER


class TestRecognizePseudoCograph:
    def test_p4(self):
        out = recognize_pseudo_cograph(P4)
        assert out.verdict == MEMBER
        assert unordered([witness_tuple(out.certificate)]) <= unordered(pseudo_cograph_witnesses(P4))
        assert witness_tuple(out.certificate) == (0, (0, 1, 3), (0, 2), JOIN)
        check_round_trip(P4, out.network)

    def test_c5(self):
        assert recognize_pseudo_cograph(C5).verdict == NON_MEMBER

    def test_two_p4(self):
        assert recognize_pseudo_cograph(TWO_P4).verdict == NON_MEMBER

    @pytest.mark.parametrize("n", [0, 1, 2])
    def test_trivially_small(self, n):
        out = recognize_pseudo_cograph(complete_graph(n) if n else Graph(0))
        assert out.member and out.certificate.trivially_small

    def test_cograph_split_at_zero(self):
        g = Graph(5, [(0, 1), (0, 2), (1, 2), (3, 4)])
        out = recognize_pseudo_cograph(g)
        assert witness_tuple(out.certificate) == (0, (0, 1, 2), (0, 3, 4), UNION)
        assert out.network[0].hybrids() == []
        check_round_trip(g, out.network)

    def test_non_pseudo_stand_in(self):
        assert not brute_pseudo_cograph(NON_PSEUDO)
        assert recognize_pseudo_cograph(NON_PSEUDO).verdict == NON_MEMBER

    def test_p6_rejected(self):
        assert recognize_pseudo_cograph(P6).verdict == NON_MEMBER

    @given(graphs(min_n=3, max_n=9))
    def test_agrees_with_oracle(self, g):
        out = recognize_pseudo_cograph(g)
        assert out.member == brute_pseudo_cograph(g)
        if out.member:
            check_pseudo_witness(g, out.certificate)
            check_round_trip(g, out.network)
            if not is_cograph(g):
                net, t = out.network
                (c,) = cycles(net)
                assert c.root == net.root
                assert net.children(c.hybrid) == (out.certificate.v,)
                assert t[net.root] == (1 if out.certificate.mode == JOIN else 0)

    @settings(max_examples=60)
    @given(graphs(min_n=4, max_n=12))
    def test_complement_closure(self, g):
        assert recognize_pseudo_cograph(g).member == recognize_pseudo_cograph(complement(g)).member


class TestBuildPseudoNetwork:
    def test_p4_example_witness(self):
        w = PseudoWitness(1, (0, 1), (1, 2, 3), UNION)
        net, t = build_pseudo_network(P4, w)
        assert evaluate(net, t) == P4
        assert len(cycles(net)) == 1 and t[net.root] == 0

    def test_join_root_label(self):
        g = complement(P4)
        w = PseudoWitness(1, (0, 1), (1, 2, 3), JOIN)
        net, t = build_pseudo_network(g, w)
        assert t[net.root] == 1 and evaluate(net, t) == g

    def test_gamma_bipartitions_give_isomorphic_contractions(self):
        nets = []
        for v, v1, v2, mode in GAMMA_WITNESSES:
            net, t = build_pseudo_network(GAMMA, PseudoWitness(v, v1, v2, mode))
            assert evaluate(net, t) == GAMMA
            nets.append(contract_quasi_discriminating(net, t))
        assert networks_isomorphic(*nets[0], *nets[1])

    def test_cograph_gives_cotree(self):
        g = Graph(4, [(0, 1), (2, 3)])
        net, t = build_pseudo_network(g, PseudoWitness(0, (0, 1), (0, 2, 3), UNION))
        assert net.hybrids() == [] and evaluate(net, t) == g

    def test_trivially_small(self):
        w = recognize_pseudo_cograph(complete_graph(2)).certificate
        net, t = build_pseudo_network(complete_graph(2), w)
        assert evaluate(net, t) == complete_graph(2)

    @pytest.mark.parametrize(
        "g, w, clause",
        [
            (P4, PseudoWitness(1, (0, 1), (2, 3), UNION), "F1"),
            (P4, PseudoWitness(1, (1,), (0, 1, 2, 3), UNION), "F1"),
            (P4, PseudoWitness(1, (0, 1, 2, 3), (1, 2), UNION), "F1"),
            (P4, PseudoWitness(None, (0, 1, 2, 3), (0, 1, 2, 3), None, True), "F1"),
            (Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4)]), PseudoWitness(0, (0, 1, 2, 3, 4), (0, 5), UNION), "F2"),
            (P4, PseudoWitness(1, (0, 1), (1, 2, 3), JOIN), "F3"),
            (P4, PseudoWitness(2, (0, 2), (1, 2, 3), UNION), "F3"),
        ],
        ids=["sides-disjoint", "side-too-small", "sides-overlap", "not-small", "side-has-p4", "not-join", "not-union"],
    )
    def test_invalid_witness_names_clause(self, g, w, clause):
        with pytest.raises(InputError, match=clause):
            build_pseudo_network(g, w)


class TestRecognizePolarCat:
    def test_p4_elementary_cycle_of_length_five(self):
        out = recognize_polar_cat(P4)
        assert out.verdict == MEMBER
        net, t = out.network
        rep = validate(net, t)
        assert rep.elementary and rep.strong and rep.quasi_discriminating
        (c,) = cycles(net)
        assert c.length == 5 == len(net.leaves) + 1
        assert evaluate(net, t) == P4

    def test_cographs_rejected(self):
        assert recognize_polar_cat(complete_graph(3)).verdict == NON_MEMBER
        assert recognize_polar_cat(Graph(4, [(0, 1), (2, 3)])).verdict == NON_MEMBER

    def test_forbidden_primitive(self):
        for g in [C5, CO_C5, SUN3, complement(SUN3)] + forbidden_primitive():
            assert recognize_polar_cat(g).verdict == NON_MEMBER

    def test_p5(self):
        out = recognize_polar_cat(P5)
        assert out.member
        check_round_trip(P5, out.network)

    def test_polarizing_but_not_cat(self):
        assert brute_pseudo_cograph(NOT_CAT) and not brute_polar_cat(NOT_CAT)
        assert any(
            w == (0, (0, 1, 2, 3, 4), (0, 5, 6), UNION) for w in pseudo_cograph_witnesses(NOT_CAT)
        )
        assert recognize_pseudo_cograph(NOT_CAT).member
        assert recognize_polar_cat(NOT_CAT).verdict == NON_MEMBER

    def test_small(self):
        assert recognize_polar_cat(path_graph(3)).verdict == NON_MEMBER

    def test_witness_shape(self):
        out = recognize_polar_cat(P5)
        w = out.certificate
        check_pseudo_witness(P5, w.pseudo)
        assert w.v == 2
        for side, o in ((w.v1, w.y), (w.v2, w.z)):
            sub, remap = induced_subgraph(P5, side)
            local = CatOrdering(tuple(remap[x] for x in o.sequence), o.mode)
            check_ordering(sub, local, remap[w.v])
            assert sorted(o.sequence) == list(side)

    @given(st.integers(5, 9), st.integers(0, 2**16))
    def test_random_elementary_graphs_accepted(self, k, seed):
        net, t = random_elementary_network(k, seed=seed)
        g = evaluate(net, t)
        out = recognize_polar_cat(g)
        assert out.member
        check_round_trip(g, out.network)
        w = out.certificate
        connected = [len(connected_components(induced_subgraph(g, s)[0])) == 1 for s in (w.v1, w.v2)]
        assert connected == ([True, True] if w.mode == UNION else [False, False])
        assert recognize_polar_cat(complement(g)).member

    @given(graphs(min_n=4, max_n=7))
    def test_agrees_with_oracle(self, g):
        out = recognize_polar_cat(g)
        assert out.member == brute_polar_cat(g)
        if out.member:
            assert is_elementary(out.network[0])
            assert brute_is_primitive(g)

    @settings(max_examples=60)
    @given(graphs(min_n=4, max_n=12))
    def test_complement_closure(self, g):
        assert recognize_polar_cat(g).member == recognize_polar_cat(complement(g)).member

    def test_random_orientation_still_valid(self):
        for seed in range(20):
            out = recognize_polar_cat(P5, rng=random.Random(seed))
            assert out.member
            check_round_trip(P5, out.network)


class TestExplainLevel1:
    def test_p6(self):
        out = explain_level1(P6)
        assert out.verdict == NON_MEMBER
        assert out.module == tuple(range(6))

    def test_cograph_is_cotree(self):
        g = Graph(5, [(0, 1), (0, 2), (3, 4)])
        out = explain_level1(g)
        assert out.member and out.certificate == []
        net, t = out.network
        assert net.hybrids() == []
        rep = validate(net, t)
        assert rep.discriminating
        check_round_trip(g, out.network)

    def test_two_p4(self):
        out = explain_level1(TWO_P4)
        assert out.member
        net, t = out.network
        assert t[net.root] == 0
        cyc = cycles(net)
        assert len(cyc) == 2
        assert sorted(c.root for c in cyc) == sorted(net.children(net.root))
        check_round_trip(TWO_P4, out.network)

    def test_pvr_three_strong_cycles(self):
        out = explain_level1(PVR)
        assert out.member
        net, t = out.network
        assert [c.strength for c in cycles(net)] == [STRONG] * 3
        assert [m for m, _ in out.certificate] == [tuple(range(10)), (0, 1, 2, 3), (6, 7, 8, 9)]
        check_round_trip(PVR, out.network)

    def test_certificate_uses_module_representatives(self):
        out = explain_level1(PVR)
        module, w = out.certificate[0]
        assert set(w.v1) | set(w.v2) == {0, 4, 5, 6}

    def test_non_pseudo_but_cat_prime(self):
        out = explain_level1(NON_PSEUDO)
        assert out.member and brute_cat_prime(NON_PSEUDO)
        t = build_mdt(NON_PSEUDO)
        q = quotient(NON_PSEUDO, max_modular_partition(NON_PSEUDO))
        assert recognize_polar_cat(q).member
        assert t.prime_nodes() == [t.root]
        check_round_trip(NON_PSEUDO, out.network)

    def test_empty_graph(self):
        with pytest.raises(InputError):
            explain_level1(Graph(0))

    def test_forbidden_primitive(self):
        for g in [P6, C5, CO_C5] + forbidden_primitive():
            assert explain_level1(g).verdict == NON_MEMBER

    def test_least_resolved_flag(self):
        g = graph_from_mask(6, 0b011011101010110)
        for seed in range(5):
            plain = explain_level1(g, seed=seed)
            if not plain.member:
                pytest.skip("sample graph is not cat-prime")
            lr = explain_level1(g, least_resolved=True, seed=seed)
            check_round_trip(g, lr.network)
            ref = least_resolved(*plain.network)
            assert networks_isomorphic(*ref, *lr.network)

    def test_non_well_proportioned_quotient_not_unique(self):
        base = explain_level1(P4, least_resolved=True, seed=0)
        assert not is_well_proportioned(base.certificate[0][1])
        differs = [
            s for s in range(1, 20)
            if not networks_isomorphic(*base.network, *explain_level1(P4, least_resolved=True, seed=s).network)
        ]
        assert differs

    @given(graphs(min_n=1, max_n=7))
    def test_agrees_with_oracle(self, g):
        out = explain_level1(g)
        assert out.member == brute_cat_prime(g)
        if out.member:
            check_round_trip(g, out.network)
            assert validate(*out.network).strong
            assert validate(*out.network).quasi_discriminating

    @settings(max_examples=30)
    @given(st.integers(0, 2**32 - 1))
    def test_random_pvr_graphs(self, seed):
        _, _, g = random_pvr_network(seed=seed)
        out = explain_level1(g)
        assert out.member
        check_round_trip(g, out.network)
        assert all(is_well_proportioned(w) for _, w in out.certificate)


class TestCounts:
    def test_cograph(self):
        assert count_strong_cycles_vs_prime_modules(complete_graph(4)) == (0, 0)

    def test_p4(self):
        assert count_strong_cycles_vs_prime_modules(P4) == (1, 1)

    def test_pvr(self):
        assert count_strong_cycles_vs_prime_modules(PVR) == (3, 3)

    def test_rejected(self):
        with pytest.raises(InputError):
            count_strong_cycles_vs_prime_modules(P6)


class TestWellProportioned:
    def test_three_four(self):
        assert is_well_proportioned(wp_witness(3, 4))

    def test_two_three(self):
        assert not is_well_proportioned(wp_witness(2, 3))

    def test_two_five(self):
        assert is_well_proportioned(wp_witness(2, 5))

    def test_two_four(self):
        assert not is_well_proportioned(wp_witness(4, 2))


# ------------------------------------------------------ census-wide properties


def _masks_of(census, n, cls):
    return census[n].members[cls]


def _mask(g):
    from catprime.graph import edge_mask

    return edge_mask(g)


def test_class_nesting(census):
    for n, stats in census.items():
        m = stats.members
        assert m["cograph"] <= m["pseudo"] <= m["cat_prime"]
        assert m["polar_cat"] <= m["pseudo"]
        assert not m["polar_cat"] & m["cograph"]


def test_strict_inclusions_present(census):
    m = census[6].members
    assert m["pseudo"] - m["cograph"]
    assert m["cat_prime"] - m["pseudo"]
    assert explain_level1(TWO_P4).member and not recognize_pseudo_cograph(TWO_P4).member


@pytest.mark.parametrize("cls", ["pseudo", "cat_prime", "cograph"])
def test_hereditary(census, cls):
    for n in range(2, 7):
        for mask in _masks_of(census, n, cls):
            g = graph_from_mask(n, mask)
            for x in range(n):
                sub, _ = induced_subgraph(g, [y for y in range(n) if y != x])
                assert _mask(sub) in _masks_of(census, n - 1, cls), (n, mask, x)


@pytest.mark.parametrize("cls", ["pseudo", "polar_cat", "cograph", "cat_prime"])
def test_complement_closure_exhaustive(census, cls):
    for n in range(1, 7):
        full = (1 << (n * (n - 1) // 2)) - 1
        members = _masks_of(census, n, cls)
        assert all(full ^ m in members for m in members)


def test_pseudo_diameter_at_most_four(census):
    # Heredity makes every connected induced subgraph another accepted graph.
    for n in range(1, 7):
        for mask in _masks_of(census, n, "pseudo"):
            g = graph_from_mask(n, mask)
            if len(connected_components(g)) == 1:
                assert diameter(g) <= 4


def test_polar_cats_are_primitive_and_connected(census):
    for n in range(4, 7):
        for mask in _masks_of(census, n, "polar_cat"):
            g = graph_from_mask(n, mask)
            assert brute_is_primitive(g)
            assert len(connected_components(g)) == 1


def test_gamma_is_a_star_at_every_witness(census):
    for n in range(4, 7):
        for mask in _masks_of(census, n, "pseudo") - _masks_of(census, n, "cograph"):
            g = graph_from_mask(n, mask)
            w = recognize_pseudo_cograph(g).certificate
            edges = gamma_graph(g, w.v).edges
            assert edges
            common = set(edges[0])
            for e in edges[1:]:
                common &= set(e)
            assert common


def test_gamma_graph_of_stand_in():
    gm = gamma_graph(GAMMA, 0)
    assert gm.mode == UNION and gm.edges == ((0, 2), (1, 2))
    got = unordered([witness_tuple(recognize_pseudo_cograph(GAMMA).certificate)])
    assert got <= unordered(pseudo_cograph_witnesses(GAMMA))
