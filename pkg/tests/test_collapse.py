import pytest

from hypereuler import (
    ClosedTrail,
    Constraint,
    EulerFamily,
    Hypergraph,
    Mode,
    collapse,
    fixed_vertex_gadget,
    gadget_family,
    link_families,
    oracle_euler,
    ungadget_family,
    verify_euler_family,
)
from hypereuler.errors import (
    BadVertexSubset,
    EdgeMissesVertex,
    TraversalConditionUnmet,
)


class TestCollapse:
    def test_h3_last_vertex(self, H3):
        coll = collapse(H3, {4})
        assert coll.collapsed_vertex == 5
        assert coll.hypergraph.vertices == frozenset({1, 2, 3, 5})
        assert coll.hypergraph.edges == (
            frozenset({1, 2, 3}),
            frozenset({1, 2, 5}),
            frozenset({3, 5}),
        )
        assert coll.edge_map == {0: 0, 1: 1, 2: 2}

    def test_bridge_far_side(self, BRIDGE):
        coll = collapse(BRIDGE, {4, 5, 6})
        assert coll.collapsed_vertex == 7
        assert coll.hypergraph.edges == (
            frozenset({1, 2}),
            frozenset({2, 3}),
            frozenset({1, 3}),
            frozenset({3, 7}),
        )
        # edges inside the collapsed side are dropped
        assert coll.edge_map == {0: 0, 1: 1, 2: 2, 3: 3}

    def test_triangle_interior(self, TRI):
        coll = collapse(TRI, {2, 3})
        # e1 = {2,3} lies inside S and disappears
        assert coll.hypergraph.edges == (frozenset({1, 4}), frozenset({1, 4}))
        assert coll.edge_map == {0: 0, 2: 1}

    def test_vertex_count(self, BOWTIE):
        coll = collapse(BOWTIE, {4, 5})
        assert coll.hypergraph.n == BOWTIE.n - 2 + 1

    def test_duplicates_stay_distinct(self, STAR):
        coll = collapse(STAR, {1})
        assert coll.hypergraph.edges.count(frozenset({0, 3})) == 2

    def test_bad_subset(self, TRI):
        with pytest.raises(BadVertexSubset):
            collapse(TRI, {1, 2, 3})


class TestGadget:
    def test_h3_collapsed(self, H3):
        coll = collapse(H3, {4})
        g = fixed_vertex_gadget(coll.hypergraph, 5, [1, 2])
        assert g.gadget_vertex_of == {1: 6, 2: 7}
        assert g.hypergraph.edges == (
            frozenset({1, 2, 3}),
            frozenset({1, 2, 6}),
            frozenset({3, 7}),
            frozenset({6, 5}),
            frozenset({7, 5}),
        )
        assert g.link_edge_of == {1: 3, 2: 4}

    def test_empty_forced_set_is_identity(self, TRI):
        g = fixed_vertex_gadget(TRI, 1, [])
        assert g.hypergraph == TRI

    def test_triangle_single_edge(self, TRI):
        g = fixed_vertex_gadget(TRI, 1, [0])
        assert g.hypergraph.edges == (
            frozenset({2, 4}),
            frozenset({2, 3}),
            frozenset({1, 3}),
            frozenset({4, 1}),
        )

    def test_edge_must_contain_vertex(self, TRI):
        with pytest.raises(EdgeMissesVertex):
            fixed_vertex_gadget(TRI, 1, [1])  # e1 = {2,3}


class TestUngadget:
    def test_h3_worked_example(self, H3):
        coll = collapse(H3, {4})
        g = fixed_vertex_gadget(coll.hypergraph, 5, [1, 2])
        tour = ClosedTrail((1, 3, 7, 5, 6, 1), (0, 2, 4, 3, 1))
        assert verify_euler_family(g.hypergraph, EulerFamily.of([tour])).ok
        fam = ungadget_family(g, EulerFamily.of([tour]))
        assert fam.trails == (ClosedTrail((1, 3, 5, 1), (0, 2, 1)),)

    def test_forward_backward_round_trip(self, H3):
        coll = collapse(H3, {4})
        g = fixed_vertex_gadget(coll.hypergraph, 5, [1, 2])
        fam = EulerFamily.of([ClosedTrail((1, 3, 5, 1), (0, 2, 1))])
        assert ungadget_family(g, gadget_family(g, fam)) == fam

    def test_forward_requires_traversal(self, H3):
        coll = collapse(H3, {4})
        g = fixed_vertex_gadget(coll.hypergraph, 5, [1])
        # this family traverses e1 between 1 and 2, never via vertex 5
        fam = EulerFamily.of(
            [ClosedTrail((1, 2, 5, 3, 1), (1, 99, 2, 0))]
        )
        with pytest.raises(TraversalConditionUnmet):
            gadget_family(g, fam)


class TestGadgetEquivalence:
    def test_h3_collapse_constrained(self, H3):
        coll = collapse(H3, {4})
        constrained = oracle_euler(
            coll.hypergraph, Mode.FAMILY, Constraint(5, frozenset({1, 2}))
        )
        gadget = fixed_vertex_gadget(coll.hypergraph, 5, [1, 2])
        plain = oracle_euler(gadget.hypergraph, Mode.FAMILY)
        assert constrained.decision and plain.decision

    def test_small_sample(self):
        import itertools
        import random

        rng = random.Random(3)
        checked = 0
        while checked < 15:
            n = rng.randint(2, 5)
            vs = list(range(1, n + 1))
            edges = tuple(
                frozenset(rng.sample(vs, rng.randint(2, n)))
                for _ in range(rng.randint(1, 4))
            )
            h = Hypergraph(frozenset(vs), edges)
            u = rng.choice(vs)
            incident = [i for i, e in enumerate(h.edges) if u in e]
            for r in (1, 2):
                for fs in itertools.combinations(incident, r):
                    gadget = fixed_vertex_gadget(h, u, fs)
                    for mode in (Mode.FAMILY, Mode.TOUR):
                        lhs = oracle_euler(h, mode, Constraint(u, frozenset(fs)))
                        rhs = oracle_euler(gadget.hypergraph, mode)
                        assert lhs.decision == rhs.decision, (h, u, fs, mode)
            checked += 1


class TestLinkFamilies:
    def test_h3_all_crossing(self, H3):
        side0 = collapse(H3, {4})  # collapses V1; family lives on {1,2,3}
        side1 = collapse(H3, {1, 2, 3})
        fam0 = EulerFamily.of([ClosedTrail((1, 3, 5, 1), (0, 2, 1))])
        fam1 = EulerFamily.of([ClosedTrail((4, 5, 4), (0, 1))])
        out = link_families(H3, side0, side1, fam0, fam1, [1, 2])
        rep = verify_euler_family(H3, out)
        assert rep.ok and rep.is_tour

    def test_missing_traversal_rejected(self, H3):
        side0 = collapse(H3, {4})
        side1 = collapse(H3, {1, 2, 3})
        fam1 = EulerFamily.of([ClosedTrail((4, 5, 4), (0, 1))])
        # fam0 never anchors the collapsed vertex
        bad = EulerFamily.of([ClosedTrail((1, 2, 3, 1), (1, 0, 2))])
        with pytest.raises(TraversalConditionUnmet):
            link_families(H3, side0, side1, bad, fam1, [1, 2])

    def test_odd_crossing_rejected(self, H3):
        side0 = collapse(H3, {4})
        side1 = collapse(H3, {1, 2, 3})
        fam0 = EulerFamily.of([ClosedTrail((1, 3, 5, 1), (0, 2, 1))])
        fam1 = EulerFamily.of([ClosedTrail((4, 5, 4), (0, 1))])
        with pytest.raises(TraversalConditionUnmet):
            link_families(H3, side0, side1, fam0, fam1, [1])
