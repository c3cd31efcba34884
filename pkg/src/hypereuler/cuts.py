"""Edge cuts: boundaries, minimality, minimalization, exact minimum cut.

The cut function counts edges with multiplicity. The minimum cut uses
exhaustive side enumeration up to 15 vertices and Queyranne-style
pendant-pair minimization of the (symmetric, submodular) hypergraph cut
function beyond that.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Tuple

from .core import Hypergraph, VertexSet
from .errors import BadVertexSubset, Disconnected, NotAnEdgeCut, TrivialHypergraph

EXHAUSTIVE_LIMIT = 15


@dataclass(frozen=True)
class EdgeCut:
    edge_ids: FrozenSet[int]
    side: VertexSet


def boundary(h: Hypergraph, side) -> EdgeCut:
    """Edges meeting both ``side`` and its complement, with witness side."""
    s = frozenset(side)
    if not s or not s < h.vertices:
        raise BadVertexSubset("side must satisfy empty < S < V")
    ids = frozenset(
        i for i, e in enumerate(h.edges) if (e & s) and (e - s)
    )
    return EdgeCut(ids, s)


def is_minimal(h: Hypergraph, cut: EdgeCut) -> bool:
    """A cut is minimal iff every cut edge meets every component of H \\ F."""
    rest, _ = h.remove_edges(cut.edge_ids)
    comps = rest.components()
    if comps.count < 2:
        raise NotAnEdgeCut("removing the edge set leaves a connected hypergraph")
    for eid in cut.edge_ids:
        e = h.edges[eid]
        for block in comps.blocks:
            if not (e & block):
                return False
    return True


def minimalize(h: Hypergraph, cut: EdgeCut) -> EdgeCut:
    """Shrink an edge cut to a minimal one contained in it.

    Scans edges and components in ascending id order; on the first edge
    missing a component, replaces the cut by that component's boundary.
    Terminates in at most |F| iterations.
    """
    current = cut
    while True:
        rest, _ = h.remove_edges(current.edge_ids)
        comps = rest.components()
        if comps.count < 2:
            raise NotAnEdgeCut("removing the edge set leaves a connected hypergraph")
        violating = None
        for eid in sorted(current.edge_ids):
            e = h.edges[eid]
            for block in comps.blocks:
                if not (e & block):
                    violating = block
                    break
            if violating is not None:
                break
        if violating is None:
            return current
        current = boundary(h, violating)


def _cut_size(h: Hypergraph, s: frozenset) -> int:
    return sum(1 for e in h.edges if (e & s) and (e - s))


def _exhaustive_min_cut(h: Hypergraph) -> EdgeCut:
    anchor = min(h.vertices)
    others = sorted(h.vertices - {anchor})
    best_size = None
    best_side = None
    # enumerate sides containing the anchor vertex; complements are equivalent
    for mask in range(0, 1 << len(others)):
        side = {anchor} | {others[i] for i in range(len(others)) if mask >> i & 1}
        if len(side) == h.n:
            continue
        s = frozenset(side)
        sz = _cut_size(h, s)
        key = (sz, tuple(sorted(s)))
        if best_size is None or key < (best_size, tuple(sorted(best_side))):
            best_size, best_side = sz, s
    return boundary(h, best_side)


def _pendant_pair_min_cut(h: Hypergraph) -> EdgeCut:
    """Queyranne minimization of the symmetric submodular cut function.

    Operates on supernodes (merged vertex groups); each round produces a
    pendant pair whose second element yields a candidate minimizer, then
    merges the pair. Only the cut cardinality is contractually guaranteed.
    """
    supernodes: List[frozenset] = [frozenset({v}) for v in sorted(h.vertices)]

    def f(group: List[frozenset]) -> int:
        s = frozenset().union(*group)
        return _cut_size(h, s)

    best_size = None
    best_side = None
    while len(supernodes) > 1:
        # maximum-ordering: next element minimizes f(W + {u}) - f({u})
        order = [supernodes[0]]
        remaining = supernodes[1:]
        while remaining:
            keys = [(f(order + [u]) - f([u]), min(u)) for u in remaining]
            pick = keys.index(min(keys))
            order.append(remaining.pop(pick))
        t, u = order[-2], order[-1]
        candidate = u
        sz = _cut_size(h, candidate)
        if best_size is None or sz < best_size:
            best_size, best_side = sz, candidate
        merged = t | u
        supernodes = [g for g in supernodes if g not in (t, u)] + [merged]
        supernodes.sort(key=min)
    return boundary(h, best_side)


def minimum_edge_cut(h: Hypergraph) -> EdgeCut:
    """Exact minimum edge cut of a connected non-trivial hypergraph."""
    if h.is_trivial:
        raise TrivialHypergraph("trivial hypergraph has no edge cut")
    if not h.is_connected:
        raise Disconnected("minimum edge cut requires a connected hypergraph")
    if h.n <= EXHAUSTIVE_LIMIT:
        return _exhaustive_min_cut(h)
    return _pendant_pair_min_cut(h)


def cheap_minimal_cut(h: Hypergraph) -> EdgeCut:
    """Minimal edge cut built by minimalizing the boundary of one vertex.

    Starts from a minimum-degree vertex (ties to the smallest id) so the
    assignment enumeration downstream stays small.
    """
    if h.is_trivial:
        raise TrivialHypergraph("trivial hypergraph has no edge cut")
    if not h.is_connected:
        raise Disconnected("minimal edge cut requires a connected hypergraph")
    v = min(sorted(h.vertices), key=lambda x: (h.degree(x), x))
    return minimalize(h, boundary(h, {v}))
