"""Ideal construction, minimal primes, duality, and quotient orders."""

import pytest
from hypothesis import given, settings

from compedge.graphs import complement, mask_of, vertices_of
from compedge.ideals import (
    NoOrderExistsError,
    NotEquigeneratedError,
    SqfIdeal,
    SqfMonomial,
    ZeroIdealError,
    alexander_dual,
    colon_min_gens,
    complementary_edge_ideal,
    degree_component,
    has_linear_quotient_order,
    height,
    is_linear_quotient_order,
    is_linearly_related,
    is_unmixed,
    lcm_graph,
    linear_quotient_order,
    minimal_primes,
    minimal_transversals,
)
from conftest import random_graphs_min_degree_one
from helpers import (
    brute_has_linear_quotient_order,
    brute_minimal_transversals,
    complete,
    cycle,
    graph,
    path,
    paw,
    p3_union_k2,
    two_k2,
)


def monomials(I):
    return I.generator_strings()


class TestConstruction:
    def test_two_k2(self):
        I = complementary_edge_ideal(two_k2())
        assert monomials(I) == ["x1*x2", "x3*x4"]

    def test_p4(self):
        I = complementary_edge_ideal(path(4))
        assert monomials(I) == ["x1*x2", "x1*x4", "x3*x4"]

    def test_k4_is_full_degree_two(self):
        I = complementary_edge_ideal(complete(4))
        assert len(I.gens) == 6
        assert I.degrees() == {2}

    def test_generator_count_is_edge_count(self):
        G = p3_union_k2()
        assert len(complementary_edge_ideal(G).gens) == G.edge_count()

    def test_standing_assumptions_enforced(self):
        with pytest.raises(Exception):
            complementary_edge_ideal(graph(4, (1, 2), (2, 3)))

    def test_monomial_string_roundtrip(self):
        m = SqfMonomial(5, mask_of([1, 3, 4]))
        assert str(m) == "x1*x3*x4"
        assert SqfMonomial.from_str(5, "x1*x3*x4") == m


class TestMinimalPrimes:
    def test_two_k2(self):
        I = complementary_edge_ideal(two_k2())
        expected = brute_minimal_transversals(I.support_masks(), 4)
        assert minimal_primes(I) == expected
        assert [vertices_of(p) for p in expected] == [
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
        ]

    def test_k4(self):
        I = complementary_edge_ideal(complete(4))
        primes = minimal_primes(I)
        assert primes == brute_minimal_transversals(I.support_masks(), 4)
        assert [vertices_of(p) for p in primes] == [
            (1, 2, 3),
            (1, 2, 4),
            (1, 3, 4),
            (2, 3, 4),
        ]

    def test_p4(self):
        I = complementary_edge_ideal(path(4))
        assert [vertices_of(p) for p in minimal_primes(I)] == [
            (1, 3),
            (1, 4),
            (2, 4),
        ]

    def test_zero_ideal_rejected(self):
        with pytest.raises(ZeroIdealError):
            minimal_primes(SqfIdeal(4, ()))

    @settings(max_examples=120, deadline=None)
    @given(random_graphs_min_degree_one(4, 6))
    def test_matches_brute_force(self, G):
        I = complementary_edge_ideal(G)
        assert minimal_primes(I) == brute_minimal_transversals(
            I.support_masks(), G.n
        )

    @settings(max_examples=120, deadline=None)
    @given(random_graphs_min_degree_one(4, 6))
    def test_antichain_and_transversal(self, G):
        I = complementary_edge_ideal(G)
        primes = minimal_primes(I)
        for a in primes:
            for b in primes:
                assert a == b or a & ~b
            for s in I.support_masks():
                assert a & s

    def test_transversals_empty_support(self):
        assert minimal_transversals([0b0], 0b1111) == []


class TestHeightUnmixed:
    def test_heights(self):
        assert height(complementary_edge_ideal(path(4))) == 2
        assert height(complementary_edge_ideal(complete(4))) == 3
        assert height(complementary_edge_ideal(two_k2())) == 2

    def test_unmixed(self):
        assert is_unmixed(complementary_edge_ideal(cycle(4)))
        assert not is_unmixed(complementary_edge_ideal(paw()))
        assert is_unmixed(complementary_edge_ideal(complete(5)))


class TestAlexanderDual:
    def test_two_k2_dual_is_complement_edge_set(self):
        G = two_k2()
        dual = alexander_dual(complementary_edge_ideal(G))
        comp_edges = [mask_of(e) for e in complement(G).edges()]
        assert sorted(dual.support_masks()) == sorted(comp_edges)

    def test_k4_dual_is_triangles(self):
        dual = alexander_dual(complementary_edge_ideal(complete(4)))
        assert [vertices_of(s) for s in dual.support_masks()] == [
            (1, 2, 3),
            (1, 2, 4),
            (1, 3, 4),
            (2, 3, 4),
        ]

    @settings(max_examples=120, deadline=None)
    @given(random_graphs_min_degree_one(4, 6))
    def test_involution(self, G):
        I = complementary_edge_ideal(G)
        assert alexander_dual(alexander_dual(I)) == I


class TestDegreeComponent:
    def test_paw_dual_degree_two(self):
        dual = alexander_dual(complementary_edge_ideal(paw()))
        assert monomials(degree_component(dual, 2)) == ["x1*x4", "x2*x4"]

    def test_paw_dual_degree_three_is_everything(self):
        dual = alexander_dual(complementary_edge_ideal(paw()))
        assert len(degree_component(dual, 3).gens) == 4

    def test_top_component_is_identity(self):
        I = complementary_edge_ideal(path(4))
        assert degree_component(I, 2) == I

    def test_below_generation_degree_empty(self):
        I = complementary_edge_ideal(path(4))
        assert degree_component(I, 1).is_zero


class TestLcmGraph:
    def test_p4_is_path(self):
        I = complementary_edge_ideal(path(4))
        # gens sorted: x1*x2 (edge 34), x1*x4 (edge 23), x3*x4 (edge 12)
        assert lcm_graph(I).edges() == [(1, 2), (2, 3)]

    def test_two_k2_no_edges(self):
        I = complementary_edge_ideal(two_k2())
        assert lcm_graph(I).edges() == []

    def test_matches_line_graph_of_paw(self):
        G = paw()
        I = complementary_edge_ideal(G)
        LG = lcm_graph(I)
        full = G.full_mask
        edges = [full ^ s for s in I.support_masks()]
        for a in range(len(edges)):
            for b in range(a + 1, len(edges)):
                share = bool(edges[a] & edges[b])
                assert bool(LG.adj[a] >> b & 1) == share

    def test_non_equigenerated_rejected(self):
        I = SqfIdeal.from_supports(4, [0b0011, 0b1110])
        with pytest.raises(NotEquigeneratedError):
            lcm_graph(I)


class TestLinearlyRelated:
    def test_examples(self):
        assert is_linearly_related(complementary_edge_ideal(path(4)))
        assert not is_linearly_related(complementary_edge_ideal(two_k2()))
        assert is_linearly_related(complementary_edge_ideal(cycle(5)))

    @settings(max_examples=80, deadline=None)
    @given(random_graphs_min_degree_one(4, 6))
    def test_iff_connected(self, G):
        from compedge.graphs import is_connected

        I = complementary_edge_ideal(G)
        assert is_linearly_related(I) == is_connected(G)


class TestLinearQuotients:
    def test_p4_certificate(self):
        cert = linear_quotient_order(path(4))
        assert [str(m) for m in cert.order] == ["x3*x4", "x1*x4", "x1*x2"]
        assert cert.colon_variables() == [(), (3,), (4,)]
        I = complementary_edge_ideal(path(4))
        assert cert.is_valid_for(I)
        assert is_linear_quotient_order(I, cert.order)

    def test_star_certificate(self):
        cert = linear_quotient_order(graph(4, (1, 2), (1, 3), (1, 4)))
        assert [str(m) for m in cert.order] == ["x3*x4", "x2*x4", "x2*x3"]
        assert cert.colon_variables() == [(), (3,), (4,)]

    def test_disconnected_raises_with_witness(self):
        with pytest.raises(NoOrderExistsError) as exc:
            linear_quotient_order(two_k2())
        assert exc.value.components == [(1, 2), (3, 4)]

    def test_bad_order_rejected(self):
        I = complementary_edge_ideal(path(4))
        bad = [
            SqfMonomial(4, mask_of([1, 2])),
            SqfMonomial(4, mask_of([3, 4])),
            SqfMonomial(4, mask_of([1, 4])),
        ]
        # second colon is the degree-two principal ideal (x3*x4)
        assert colon_min_gens([mask_of([1, 2])], mask_of([3, 4])) == (
            mask_of([1, 2]),
        )
        assert not is_linear_quotient_order(I, bad)

    def test_two_k2_no_order_at_all(self):
        I = complementary_edge_ideal(two_k2())
        assert not has_linear_quotient_order(I)
        assert not brute_has_linear_quotient_order(I)

    def test_non_permutation_rejected(self):
        I = complementary_edge_ideal(path(4))
        with pytest.raises(ValueError):
            is_linear_quotient_order(I, I.gens[:2])

    @settings(max_examples=60, deadline=None)
    @given(random_graphs_min_degree_one(4, 5))
    def test_exhaustive_search_matches_permutations(self, G):
        I = complementary_edge_ideal(G)
        if len(I.gens) > 6:
            return
        assert has_linear_quotient_order(I) == brute_has_linear_quotient_order(I)

    @settings(max_examples=80, deadline=None)
    @given(random_graphs_min_degree_one(4, 6))
    def test_connected_orders_verify(self, G):
        from compedge.graphs import is_connected

        I = complementary_edge_ideal(G)
        if is_connected(G):
            cert = linear_quotient_order(G)
            assert cert.is_valid_for(I)
        else:
            with pytest.raises(NoOrderExistsError):
                linear_quotient_order(G)
