import pytest

from hypereuler import (
    Assignment,
    BlockPartition,
    ClosedTrail,
    EdgeCut,
    EulerFamily,
    Hypergraph,
    Mode,
    Multigraph,
    apply_assignment,
    assignment_count_bound,
    assignment_from_family,
    check_assignment,
    enumerate_assignments,
    enumerate_bipartitions,
    lift_family,
    multigraph_euler_status,
    oracle_euler,
    quotient_multigraph,
    standard_blocks,
    valid_pairs_for_edge,
    verify_euler_family,
)
from hypereuler.errors import InvalidAssignment, NotMinimal, SingleComponent

H3_CUT = EdgeCut(frozenset({1, 2}), frozenset({4}))


def h3_blocks(h3):
    return standard_blocks(h3, H3_CUT)


class TestStandardBlocks:
    def test_h3(self, H3):
        blocks = h3_blocks(H3)
        assert blocks.blocks == (frozenset({1, 2, 3}), frozenset({4}))
        assert blocks.standard

    def test_bridge(self, BRIDGE):
        blocks = standard_blocks(BRIDGE, EdgeCut(frozenset({3}), frozenset({1, 2, 3})))
        assert blocks.blocks == (frozenset({1, 2, 3}), frozenset({4, 5, 6}))

    def test_triangle(self, TRI):
        blocks = standard_blocks(TRI, EdgeCut(frozenset({0, 2}), frozenset({1})))
        assert blocks.blocks == (frozenset({1}), frozenset({2, 3}))

    def test_not_minimal_rejected(self, BOWTIE):
        with pytest.raises(NotMinimal):
            standard_blocks(BOWTIE, EdgeCut(frozenset(range(6)), frozenset({1})))

    def test_block_of(self, H3):
        blocks = h3_blocks(H3)
        assert blocks.block_of(2) == 0 and blocks.block_of(4) == 1


class TestBipartitions:
    def _partition(self, k):
        blocks = tuple(frozenset({i}) for i in range(1, k + 1))
        return BlockPartition(blocks, standard=True)

    @pytest.mark.parametrize("k,count", [(2, 1), (3, 3), (4, 7)])
    def test_counts(self, k, count):
        assert len(list(enumerate_bipartitions(self._partition(k)))) == count

    def test_side0_holds_block0(self):
        for bip in enumerate_bipartitions(self._partition(4)):
            assert 1 in bip.blocks[0]

    def test_single_block_rejected(self):
        with pytest.raises(SingleComponent):
            list(enumerate_bipartitions(self._partition(1)))


class TestEnumeration:
    def test_h3_exactly_two(self, H3):
        blocks = h3_blocks(H3)
        found = list(enumerate_assignments(H3, H3_CUT, blocks))
        mappings = [a.mapping for a in found]
        assert mappings == [
            {1: (0, 0), 2: (0, 1)},
            {1: (0, 1), 2: (0, 1)},
        ]

    def test_thin_edge_only_off_diagonal(self, H3):
        blocks = h3_blocks(H3)
        # e2 = {3,4} meets both blocks in a single vertex each
        assert valid_pairs_for_edge(H3.edges[2], blocks) == [(0, 1)]

    def test_all_fat_bound_tight(self):
        h = Hypergraph.build(
            range(1, 7),
            [
                {1, 2},
                {2, 3},
                {1, 3},
                {4, 5},
                {5, 6},
                {4, 6},
                {1, 2, 4, 5},
                {1, 2, 4, 5},
                {1, 2, 4, 5},
            ],
        )
        cut = EdgeCut(frozenset({6, 7, 8}), frozenset({1, 2, 3}))
        blocks = standard_blocks(h, cut)
        found = list(enumerate_assignments(h, cut, blocks))
        assert len(found) == 27
        assert assignment_count_bound(blocks, cut) == 27

    def test_bound_holds(self, BOWTIE):
        cut = EdgeCut(frozenset({0, 2}), frozenset({1}))
        blocks = standard_blocks(BOWTIE, cut)
        found = list(enumerate_assignments(BOWTIE, cut, blocks))
        assert len(found) <= assignment_count_bound(blocks, cut)

    def test_invalid_assignment_rejected(self, H3):
        blocks = h3_blocks(H3)
        with pytest.raises(InvalidAssignment):
            check_assignment(H3, H3_CUT, blocks, Assignment(((1, (0, 0)), (2, (1, 1)))))


class TestApply:
    def test_identity_branch(self, H3):
        blocks = h3_blocks(H3)
        a = Assignment(((1, (0, 1)), (2, (0, 1))))
        h_alpha, id_map = apply_assignment(H3, H3_CUT, blocks, a)
        assert h_alpha == H3
        assert id_map == {0: 0, 1: 1, 2: 2}

    def test_trimming_branch(self, H3):
        blocks = h3_blocks(H3)
        a = Assignment(((1, (0, 0)), (2, (0, 1))))
        h_alpha, _ = apply_assignment(H3, H3_CUT, blocks, a)
        assert h_alpha.edges[1] == frozenset({1, 2})
        assert h_alpha.edges[2] == frozenset({3, 4})


class TestQuotient:
    def test_parallel_edges(self, H3):
        blocks = h3_blocks(H3)
        a = Assignment(((1, (0, 1)), (2, (0, 1))))
        g = quotient_multigraph(H3_CUT, blocks, a)
        assert g.edges == ((1, (0, 1)), (2, (0, 1)))
        status = multigraph_euler_status(g)
        assert status.has_family and status.has_tour

    def test_loop_plus_edge_odd(self, H3):
        blocks = h3_blocks(H3)
        a = Assignment(((1, (0, 0)), (2, (0, 1))))
        status = multigraph_euler_status(quotient_multigraph(H3_CUT, blocks, a))
        assert not status.has_family and not status.has_tour

    def test_two_disjoint_digons(self):
        g = Multigraph(
            (0, 1, 2, 3),
            ((0, (0, 1)), (1, (0, 1)), (2, (2, 3)), (3, (2, 3))),
        )
        status = multigraph_euler_status(g)
        assert status.has_family and not status.has_tour

    def test_edgeless(self):
        status = multigraph_euler_status(Multigraph((0, 1), ()))
        assert status.has_family and status.has_tour


class TestLifting:
    def test_identity_lift(self, H3):
        fam = EulerFamily.of([ClosedTrail((1, 3, 4, 1), (0, 2, 1))])
        assert lift_family(fam, {0: 0, 1: 1, 2: 2}) == fam

    def test_relabel_lift(self):
        fam = EulerFamily.of([ClosedTrail((1, 2, 3, 1), (0, 1, 2))])
        lifted = lift_family(fam, {0: 5, 1: 6, 2: 7})
        assert lifted.trails[0].edge_ids == (5, 6, 7)

    def test_assignment_from_tour(self, H3):
        blocks = h3_blocks(H3)
        fam = EulerFamily.of([ClosedTrail((1, 3, 4, 1), (0, 2, 1))])
        a = assignment_from_family(H3, H3_CUT, blocks, fam)
        assert a.mapping == {1: (0, 1), 2: (0, 1)}

    def test_round_trip_projection(self, H3):
        # a family of H whose cut edges keep both anchors inside the
        # assigned blocks projects to a valid family of H^alpha
        blocks = h3_blocks(H3)
        fam = EulerFamily.of([ClosedTrail((1, 3, 4, 1), (0, 2, 1))])
        a = assignment_from_family(H3, H3_CUT, blocks, fam)
        h_alpha, id_map = apply_assignment(H3, H3_CUT, blocks, a)
        projected = lift_family(fam, id_map)
        assert verify_euler_family(h_alpha, projected).ok


def test_pruning_soundness(H3, TRI, BOWTIE):
    """If the quotient multigraph rules a branch out, the derived
    hypergraph has no Euler family."""
    from hypereuler import cheap_minimal_cut

    for h in (H3, TRI, BOWTIE):
        cut = cheap_minimal_cut(h)
        blocks = standard_blocks(h, cut)
        for a in enumerate_assignments(h, cut, blocks):
            status = multigraph_euler_status(quotient_multigraph(cut, blocks, a))
            h_alpha, _ = apply_assignment(h, cut, blocks, a)
            if not status.has_family:
                assert not oracle_euler(h_alpha, Mode.FAMILY).decision
            if not status.has_tour:
                assert not oracle_euler(h_alpha, Mode.TOUR).decision
