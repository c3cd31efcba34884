"""Edge cut assignments, the derived hypergraph and quotient multigraph,
assignment enumeration, and certificate lifting.

Unordered block pairs are canonicalized as (min, max). Enumeration is
lexicographic over cut edges in ascending id order, so the first success
found by any consumer is the lexicographically least one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Tuple

from .core import Hypergraph, VertexSet
from .cuts import EdgeCut, is_minimal
from .errors import (
    CertificateInvalid,
    InvalidAssignment,
    NotMinimal,
    SingleComponent,
)
from .trails import EulerFamily


@dataclass(frozen=True)
class BlockPartition:
    """Partition of V into unions of components of H \\ F."""

    blocks: Tuple[VertexSet, ...]
    standard: bool

    @property
    def count(self) -> int:
        return len(self.blocks)

    def block_of(self, v: int) -> int:
        for i, b in enumerate(self.blocks):
            if v in b:
                return i
        raise KeyError(v)


@dataclass(frozen=True)
class Assignment:
    """Map from cut edge ids to canonical unordered block pairs."""

    pairs: Tuple[Tuple[int, Tuple[int, int]], ...]  # ((edge_id, (i, j)), ...) ascending

    @property
    def mapping(self) -> Dict[int, Tuple[int, int]]:
        return dict(self.pairs)

    def preimage(self, pair: Tuple[int, int]) -> FrozenSet[int]:
        return frozenset(eid for eid, p in self.pairs if p == pair)


@dataclass(frozen=True)
class Multigraph:
    """Quotient multigraph on block ids; one labeled edge per cut edge."""

    block_ids: Tuple[int, ...]
    edges: Tuple[Tuple[int, Tuple[int, int]], ...]  # (label, (i, j)), loops allowed


@dataclass(frozen=True)
class EulerStatus:
    has_family: bool
    has_tour: bool


def standard_blocks(h: Hypergraph, cut: EdgeCut) -> BlockPartition:
    """One block per component of H \\ F, ascending by minimum vertex id."""
    if not is_minimal(h, cut):
        raise NotMinimal("standard blocks require a minimal edge cut")
    rest, _ = h.remove_edges(cut.edge_ids)
    return BlockPartition(rest.components().blocks, standard=True)


def enumerate_bipartitions(blocks: BlockPartition) -> Iterator[BlockPartition]:
    """All 2^(|I|-1) - 1 merges of the blocks into two non-empty sides.

    Side 0 always contains block 0. The result is flagged standard only
    when the input had exactly two blocks.
    """
    k = blocks.count
    if k < 2:
        raise SingleComponent("need at least two blocks to bipartition")
    for mask in range(0, 1 << (k - 1)):
        chosen = {0} | {i + 1 for i in range(k - 1) if mask >> i & 1}
        if len(chosen) == k:
            continue
        side0 = frozenset().union(*(blocks.blocks[i] for i in sorted(chosen)))
        side1 = frozenset().union(*(blocks.blocks[i] for i in range(k) if i not in chosen))
        yield BlockPartition((side0, side1), standard=(k == 2))


def valid_pairs_for_edge(edge: VertexSet, blocks: BlockPartition) -> List[Tuple[int, int]]:
    """Canonical sorted list of block pairs the edge may be assigned to."""
    hit = [i for i, b in enumerate(blocks.blocks) if edge & b]
    fat = [i for i in hit if len(edge & blocks.blocks[i]) >= 2]
    pairs = [(i, i) for i in fat]
    pairs += [(i, j) for i, j in itertools.combinations(hit, 2)]
    return sorted(pairs)


def check_assignment(h: Hypergraph, cut: EdgeCut, blocks: BlockPartition, a: Assignment) -> None:
    mapping = a.mapping
    if set(mapping) != set(cut.edge_ids):
        raise InvalidAssignment("assignment domain differs from the cut")
    for eid, (i, j) in mapping.items():
        e = h.edges[eid]
        if i == j:
            if len(e & blocks.blocks[i]) < 2:
                raise InvalidAssignment(
                    f"e{eid} assigned to diagonal block {i} but meets it in < 2 vertices"
                )
        else:
            if not (e & blocks.blocks[i]) or not (e & blocks.blocks[j]):
                raise InvalidAssignment(f"e{eid} does not meet both blocks {i},{j}")


def enumerate_assignments(
    h: Hypergraph, cut: EdgeCut, blocks: BlockPartition
) -> Iterator[Assignment]:
    """All valid assignments, lexicographic over ascending cut-edge ids."""
    eids = sorted(cut.edge_ids)
    options = [valid_pairs_for_edge(h.edges[eid], blocks) for eid in eids]
    for combo in itertools.product(*options):
        yield Assignment(tuple(zip(eids, combo)))


def assignment_count_bound(blocks: BlockPartition, cut: EdgeCut) -> int:
    k = blocks.count
    return (k * (k + 1) // 2) ** len(cut.edge_ids)


def apply_assignment(
    h: Hypergraph, cut: EdgeCut, blocks: BlockPartition, a: Assignment
) -> Tuple[Hypergraph, Dict[int, int]]:
    """Derived hypergraph: each cut edge trimmed to its two assigned blocks.

    Edge ids are preserved, so the returned edge map is the identity.
    """
    check_assignment(h, cut, blocks, a)
    mapping = a.mapping
    new_edges = []
    for eid, e in enumerate(h.edges):
        if eid in mapping:
            i, j = mapping[eid]
            new_edges.append(e & (blocks.blocks[i] | blocks.blocks[j]))
        else:
            new_edges.append(e)
    id_map = {i: i for i in range(h.m)}
    return Hypergraph(h.vertices, tuple(new_edges)), id_map


def quotient_multigraph(cut: EdgeCut, blocks: BlockPartition, a: Assignment) -> Multigraph:
    return Multigraph(tuple(range(blocks.count)), a.pairs)


def multigraph_euler_status(g: Multigraph) -> EulerStatus:
    """Even-degree / component test; loops add 2 to a degree.

    An edgeless multigraph trivially has both a family and a tour.
    """
    if not g.edges:
        return EulerStatus(True, True)
    degree = {b: 0 for b in g.block_ids}
    parent = {b: b for b in g.block_ids}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for _, (i, j) in g.edges:
        degree[i] += 1
        degree[j] += 1
        pi, pj = find(i), find(j)
        if pi != pj:
            parent[pi] = pj
    even = all(d % 2 == 0 for d in degree.values())
    nonempty_roots = {find(i) for _, (i, j) in g.edges} | {find(j) for _, (i, j) in g.edges}
    return EulerStatus(even, even and len(nonempty_roots) <= 1)


def lift_family(family: EulerFamily, edge_map: Dict[int, int]) -> EulerFamily:
    """Relabel a certificate along an edge-id map (e.g. e^alpha -> e)."""
    try:
        return family.relabel_edges(edge_map)
    except KeyError as exc:
        raise CertificateInvalid(f"edge id {exc} missing from the lifting map") from exc


def assignment_from_family(
    h: Hypergraph, cut: EdgeCut, blocks: BlockPartition, family: EulerFamily
) -> Assignment:
    """Assignment induced by how the family traverses each cut edge."""
    traversal: Dict[int, Tuple[int, int]] = {}
    for t in family.trails:
        for i, eid in enumerate(t.edge_ids):
            if eid in cut.edge_ids:
                u, v = t.anchor_vertices[i], t.anchor_vertices[i + 1]
                bi, bj = blocks.block_of(u), blocks.block_of(v)
                traversal[eid] = (min(bi, bj), max(bi, bj))
    missing = set(cut.edge_ids) - set(traversal)
    if missing:
        raise CertificateInvalid(f"family does not traverse cut edges {sorted(missing)}")
    a = Assignment(tuple(sorted(traversal.items())))
    check_assignment(h, cut, blocks, a)
    return a
