"""Core hypergraph representation, connectivity, and the degree-<=1 peeling pass.

Vertices are non-negative integers. Edges form an indexed multiset: two edges
with identical vertex sets are distinct objects identified by their index.
All values are immutable; every operation returns a new hypergraph.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Sequence, Tuple

from .errors import (
    BadVertexSubset,
    EdgeNotSubsetOfV,
    EmptyVertexSet,
    UnknownEdgeId,
    UnknownVertex,
)

VertexSet = FrozenSet[int]


@dataclass(frozen=True)
class Hypergraph:
    vertices: VertexSet
    edges: Tuple[VertexSet, ...]

    @staticmethod
    def build(vertices: Iterable[int], edges: Sequence[Iterable[int]]) -> "Hypergraph":
        vset = frozenset(vertices)
        if not vset:
            raise EmptyVertexSet("vertex set must be non-empty")
        out = []
        for idx, e in enumerate(edges):
            eset = frozenset(e)
            if not eset <= vset:
                raise EdgeNotSubsetOfV(idx)
            out.append(eset)
        return Hypergraph(vset, tuple(out))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def size(self) -> int:
        """Total size p = sum of edge cardinalities."""
        return sum(len(e) for e in self.edges)

    @property
    def is_trivial(self) -> bool:
        return len(self.vertices) == 1

    @property
    def is_empty(self) -> bool:
        return not self.edges

    @property
    def has_small_edge(self) -> bool:
        """True if some edge has cardinality < 2."""
        return any(len(e) < 2 for e in self.edges)

    @cached_property
    def incidence(self) -> Dict[int, Tuple[int, ...]]:
        """Vertex -> ascending tuple of incident edge ids."""
        inc: Dict[int, list] = {v: [] for v in self.vertices}
        for i, e in enumerate(self.edges):
            for v in e:
                inc[v].append(i)
        return {v: tuple(ids) for v, ids in inc.items()}

    def degree(self, v: int) -> int:
        if v not in self.vertices:
            raise UnknownVertex(f"vertex {v} not in hypergraph")
        return len(self.incidence[v])

    def components(self) -> "ComponentDecomposition":
        """Connectivity classes of the vertex set.

        Edges of cardinality <= 1 connect nothing; isolated vertices form
        singleton components.
        """
        seen = set()
        blocks = []
        for start in sorted(self.vertices):
            if start in seen:
                continue
            block = {start}
            queue = [start]
            seen.add(start)
            while queue:
                v = queue.pop()
                for eid in self.incidence[v]:
                    e = self.edges[eid]
                    if len(e) < 2:
                        continue
                    for w in e:
                        if w not in seen:
                            seen.add(w)
                            block.add(w)
                            queue.append(w)
            blocks.append(frozenset(block))
        blocks.sort(key=min)
        component_of = {}
        for i, b in enumerate(blocks):
            for v in b:
                component_of[v] = i
        return ComponentDecomposition(tuple(blocks), component_of)

    @property
    def is_connected(self) -> bool:
        return self.components().count == 1

    def induced(self, subset: Iterable[int]) -> Tuple["Hypergraph", Dict[int, int]]:
        """Subhypergraph induced by a vertex subset, plus an old->new edge id map.

        Edges with empty intersection are dropped; intersections of
        cardinality 1 are kept so the small-edge failure test downstream can
        fire on them.
        """
        vsub = frozenset(subset)
        if not vsub or not vsub <= self.vertices:
            raise BadVertexSubset(f"{set(vsub)} is not a non-empty subset of V")
        new_edges = []
        id_map: Dict[int, int] = {}
        for i, e in enumerate(self.edges):
            inter = e & vsub
            if inter:
                id_map[i] = len(new_edges)
                new_edges.append(inter)
        return Hypergraph(vsub, tuple(new_edges)), id_map

    def remove_edges(self, edge_ids: Iterable[int]) -> Tuple["Hypergraph", Dict[int, int]]:
        """Drop the given edge ids; returns the new hypergraph and old->new map."""
        drop = set(edge_ids)
        for eid in drop:
            if not (0 <= eid < self.m):
                raise UnknownEdgeId(f"edge id {eid} out of range")
        kept = []
        id_map: Dict[int, int] = {}
        for i, e in enumerate(self.edges):
            if i not in drop:
                id_map[i] = len(kept)
                kept.append(e)
        return Hypergraph(self.vertices, tuple(kept)), id_map

    def add_edges(self, new_edges: Sequence[Iterable[int]]) -> "Hypergraph":
        extra = []
        for e in new_edges:
            eset = frozenset(e)
            if not eset <= self.vertices:
                raise EdgeNotSubsetOfV(self.m + len(extra))
            extra.append(eset)
        return Hypergraph(self.vertices, self.edges + tuple(extra))

    def restrict_to_component(self, block: VertexSet) -> Tuple["Hypergraph", Dict[int, int]]:
        """Component subhypergraph: the block plus all edges lying inside it."""
        new_edges = []
        id_map: Dict[int, int] = {}
        for i, e in enumerate(self.edges):
            if e and e <= block:
                id_map[i] = len(new_edges)
                new_edges.append(e)
        return Hypergraph(block, tuple(new_edges)), id_map


@dataclass(frozen=True)
class ComponentDecomposition:
    blocks: Tuple[VertexSet, ...]
    component_of: Dict[int, int]

    @property
    def count(self) -> int:
        return len(self.blocks)


class PeelVerdict(enum.Enum):
    PROCEED = "proceed"
    NO_EULER_FAMILY = "no-euler-family"
    TRIVIAL_EULERIAN = "trivial-eulerian"


@dataclass(frozen=True)
class PeelResult:
    reduced: Hypergraph
    removed: Tuple[int, ...]
    verdict: PeelVerdict


def peel_degree_le1(h: Hypergraph) -> PeelResult:
    """Sequentially delete degree-<=1 vertices until none remain or H is trivial.

    Edges are kept even as they shrink; edge ids are stable throughout. An
    edge of cardinality < 2 at any step certifies that no Euler family
    exists. Reaching a trivial empty hypergraph certifies (trivial)
    eulerianness. The verdict and the surviving vertex set are independent
    of the deletion order.
    """
    vertices = set(h.vertices)
    edges = [set(e) for e in h.edges]
    removed = []
    while True:
        if edges and any(len(e) < 2 for e in edges):
            reduced = Hypergraph(frozenset(vertices), tuple(frozenset(e) for e in edges))
            return PeelResult(reduced, tuple(removed), PeelVerdict.NO_EULER_FAMILY)
        if len(vertices) == 1:
            reduced = Hypergraph(frozenset(vertices), tuple(frozenset(e) for e in edges))
            return PeelResult(reduced, tuple(removed), PeelVerdict.TRIVIAL_EULERIAN)
        degree = {v: 0 for v in vertices}
        for e in edges:
            for v in e:
                degree[v] += 1
        low = sorted(v for v in vertices if degree[v] <= 1)
        if not low:
            reduced = Hypergraph(frozenset(vertices), tuple(frozenset(e) for e in edges))
            return PeelResult(reduced, tuple(removed), PeelVerdict.PROCEED)
        v = low[0]
        vertices.discard(v)
        for e in edges:
            e.discard(v)
        removed.append(v)
