"""Walks, closed trails, Euler families, and certificate verification.

A walk is stored explicitly as its anchor sequence plus its edge-id
sequence; rotation and reversal of closed trails are free operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

from .core import Hypergraph
from .errors import CertificateInvalid, EdgesOverlap, NotAnAnchor


@dataclass(frozen=True)
class Walk:
    """Alternating sequence v0 e1 v1 ... ek vk.

    ``anchor_vertices`` has length k+1 and ``edge_ids`` length k.
    """

    anchor_vertices: Tuple[int, ...]
    edge_ids: Tuple[int, ...]

    def __post_init__(self):
        if len(self.anchor_vertices) != len(self.edge_ids) + 1:
            raise ValueError("walk sequence lengths do not alternate correctly")

    @property
    def length(self) -> int:
        return len(self.edge_ids)

    @property
    def anchors(self) -> FrozenSet[int]:
        return frozenset(self.anchor_vertices)

    @property
    def anchor_flags(self) -> FrozenSet[Tuple[int, int]]:
        flags = set()
        for i, e in enumerate(self.edge_ids):
            flags.add((self.anchor_vertices[i], e))
            flags.add((self.anchor_vertices[i + 1], e))
        return frozenset(flags)

    @property
    def endpoints(self) -> Tuple[int, int]:
        return self.anchor_vertices[0], self.anchor_vertices[-1]


@dataclass(frozen=True)
class ClosedTrail(Walk):
    """Closed walk of length >= 2 with pairwise distinct edges."""

    def __post_init__(self):
        super().__post_init__()
        if self.length < 2:
            raise ValueError("closed trail must have length >= 2")
        if self.anchor_vertices[0] != self.anchor_vertices[-1]:
            raise ValueError("closed trail must start and end at the same vertex")
        if len(set(self.edge_ids)) != len(self.edge_ids):
            raise ValueError("trail edges must be pairwise distinct")

    def rotate_to(self, v: int) -> "ClosedTrail":
        """Rotate so the trail starts (and ends) at anchor v."""
        if v not in self.anchors:
            raise NotAnAnchor(f"vertex {v} is not an anchor of the trail")
        i = self.anchor_vertices.index(v)
        return self.rotate_index(i)

    def rotate_index(self, i: int) -> "ClosedTrail":
        """Rotate so position i (0 <= i < length) becomes the start."""
        k = self.length
        i %= k
        vs = self.anchor_vertices[i:k] + self.anchor_vertices[:i] + (self.anchor_vertices[i],)
        es = self.edge_ids[i:] + self.edge_ids[:i]
        return ClosedTrail(vs, es)

    def reversed(self) -> "ClosedTrail":
        return ClosedTrail(self.anchor_vertices[::-1], self.edge_ids[::-1])

    def relabel_edges(self, id_map: Dict[int, int]) -> "ClosedTrail":
        return ClosedTrail(self.anchor_vertices, tuple(id_map[e] for e in self.edge_ids))


@dataclass(frozen=True)
class EulerFamily:
    trails: Tuple[ClosedTrail, ...]

    @staticmethod
    def of(trails) -> "EulerFamily":
        # canonical order keeps output deterministic regardless of assembly order
        return EulerFamily(tuple(sorted(trails, key=lambda t: (min(t.anchors), t.edge_ids))))

    @property
    def is_tour(self) -> bool:
        return len(self.trails) == 1

    @property
    def anchors(self) -> FrozenSet[int]:
        out: set = set()
        for t in self.trails:
            out |= t.anchors
        return frozenset(out)

    def relabel_edges(self, id_map: Dict[int, int]) -> "EulerFamily":
        return EulerFamily.of(t.relabel_edges(id_map) for t in self.trails)


EMPTY_FAMILY = EulerFamily(())


@dataclass(frozen=True)
class Report:
    ok: bool
    violations: Tuple[str, ...] = ()
    is_tour: bool = False
    spanning: Optional[bool] = None

    def __bool__(self) -> bool:
        return self.ok


def validate_walk(h: Hypergraph, walk: Walk) -> Report:
    """Check membership, consecutive-distinctness, and edge cardinality >= 2.

    Violations are reported with positions; the walk is not required to be
    a trail.
    """
    violations: List[str] = []
    for i, v in enumerate(walk.anchor_vertices):
        if v not in h.vertices:
            violations.append(f"vertex {v} at position {i} not in hypergraph")
    for i, eid in enumerate(walk.edge_ids):
        if not (0 <= eid < h.m):
            violations.append(f"edge id {eid} at step {i + 1} out of range")
            continue
        e = h.edges[eid]
        if len(e) < 2:
            violations.append(f"edge e{eid} at step {i + 1} has cardinality < 2")
        u, v = walk.anchor_vertices[i], walk.anchor_vertices[i + 1]
        if u == v:
            violations.append(f"consecutive vertices equal at position {i + 1}")
        if u not in e:
            violations.append(f"vertex {u} not in e{eid} at step {i + 1}")
        if v not in e:
            violations.append(f"vertex {v} not in e{eid} at step {i + 1}")
        if violations:
            break
    return Report(ok=not violations, violations=tuple(violations))


def verify_euler_family(h: Hypergraph, family: EulerFamily, spanning: bool = False) -> Report:
    """Full certificate check against a host hypergraph.

    Validates every trail, pairwise edge- and anchor-disjointness, and that
    each edge id of ``h`` is used exactly once across the family. With
    ``spanning`` set, additionally checks that every vertex is an anchor.
    """
    violations: List[str] = []
    for t in family.trails:
        rep = validate_walk(h, t)
        if not rep.ok:
            violations.extend(rep.violations)
    used: Dict[int, int] = {}
    for t in family.trails:
        for eid in t.edge_ids:
            used[eid] = used.get(eid, 0) + 1
    for eid, cnt in sorted(used.items()):
        if cnt > 1:
            violations.append(f"edge e{eid} reused across the family")
    missing = [i for i in range(h.m) if i not in used]
    if missing:
        violations.append("edges not traversed: " + ", ".join(f"e{i}" for i in missing))
    seen_anchors: set = set()
    for t in family.trails:
        overlap = t.anchors & seen_anchors
        if overlap:
            violations.append(f"trails share anchors {sorted(overlap)}")
        seen_anchors |= t.anchors
    spanning_ok: Optional[bool] = None
    if spanning:
        spanning_ok = seen_anchors == set(h.vertices)
        if not spanning_ok:
            unreached = sorted(set(h.vertices) - seen_anchors)
            violations.append(f"not spanning: vertices {unreached} are not anchors")
    return Report(
        ok=not violations,
        violations=tuple(violations),
        is_tour=family.is_tour,
        spanning=spanning_ok,
    )


def traverses_vertex_via(trail: ClosedTrail, v: int, eid: int) -> bool:
    """True if the trail contains the subsequence ``v eid`` or ``eid v``."""
    for i, e in enumerate(trail.edge_ids):
        if e == eid and v in (trail.anchor_vertices[i], trail.anchor_vertices[i + 1]):
            return True
    return False


def family_traverses_vertex_via(family: EulerFamily, v: int, eid: int) -> bool:
    return any(traverses_vertex_via(t, v, eid) for t in family.trails)


def concatenate_at_anchor(t1: ClosedTrail, t2: ClosedTrail, v: int) -> ClosedTrail:
    """Splice two edge-disjoint closed trails at a common anchor."""
    if set(t1.edge_ids) & set(t2.edge_ids):
        raise EdgesOverlap("trails share edges")
    if v not in t1.anchors or v not in t2.anchors:
        raise NotAnAnchor(f"vertex {v} is not an anchor of both trails")
    a = t1.rotate_to(v)
    b = t2.rotate_to(v)
    vs = a.anchor_vertices[:-1] + b.anchor_vertices
    es = a.edge_ids + b.edge_ids
    return ClosedTrail(vs, es)
