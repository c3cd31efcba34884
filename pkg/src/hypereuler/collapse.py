"""Collapsed hypergraphs, the fixed-vertex gadget, and trail linking.

These are the constructions behind the binary reduction: a vertex subset is
collapsed to a single fresh vertex, a gadget turns "traverse u via each of
these edges" into plain Euler-family existence, and linking splices the two
side families back into a family of the derived hypergraph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Tuple

from .core import Hypergraph, VertexSet
from .errors import (
    BadVertexSubset,
    CertificateInvalid,
    EdgeMissesVertex,
    MalformedGadgetTraversal,
    TraversalConditionUnmet,
)
from .trails import (
    ClosedTrail,
    EulerFamily,
    concatenate_at_anchor,
    traverses_vertex_via,
    verify_euler_family,
)


@dataclass(frozen=True)
class Collapsed:
    hypergraph: Hypergraph
    collapsed_vertex: int
    edge_map: Dict[int, int]  # original id -> collapsed id (partial)


@dataclass(frozen=True)
class Gadget:
    hypergraph: Hypergraph
    fixed_vertex: int
    forced_edges: Tuple[int, ...]  # ascending ids of f; f' reuses f's id
    gadget_vertex_of: Dict[int, int]  # f -> u_f
    link_edge_of: Dict[int, int]  # f -> id of e_f = {u_f, u}


def collapse(h: Hypergraph, subset: Iterable[int]) -> Collapsed:
    """Identify all of S into a fresh vertex (max id + 1).

    Edges entirely inside S disappear; duplicate collapsed edges stay
    distinct. The edge map records surviving original ids.
    """
    s = frozenset(subset)
    if not s or not s < h.vertices:
        raise BadVertexSubset("collapse set must satisfy empty < S < V")
    u = max(h.vertices) + 1
    outside = h.vertices - s
    new_vertices = frozenset(outside | {u})
    new_edges: List[frozenset] = []
    edge_map: Dict[int, int] = {}
    for i, e in enumerate(h.edges):
        if not (e & outside):
            continue
        collapsed_edge = e if not (e & s) else frozenset((e - s) | {u})
        edge_map[i] = len(new_edges)
        new_edges.append(collapsed_edge)
    return Collapsed(Hypergraph(new_vertices, tuple(new_edges)), u, edge_map)


def fixed_vertex_gadget(h: Hypergraph, u: int, forced: Iterable[int]) -> Gadget:
    """Split each forced edge f at u into f' = (f - {u}) + {u_f} and e_f = {u_f, u}.

    Fresh vertices are max id + 1, 2, ... in ascending f order; f' keeps
    f's edge id and the e_f edges are appended at the end.
    """
    fs = tuple(sorted(set(forced)))
    for f in fs:
        if u not in h.edges[f]:
            raise EdgeMissesVertex(f"edge e{f} is not incident with vertex {u}")
    next_v = max(h.vertices) + 1
    gadget_vertex_of: Dict[int, int] = {}
    for f in fs:
        gadget_vertex_of[f] = next_v
        next_v += 1
    edges = list(h.edges)
    for f in fs:
        edges[f] = frozenset((h.edges[f] - {u}) | {gadget_vertex_of[f]})
    link_edge_of: Dict[int, int] = {}
    for f in fs:
        link_edge_of[f] = len(edges)
        edges.append(frozenset({gadget_vertex_of[f], u}))
    vertices = frozenset(h.vertices | set(gadget_vertex_of.values()))
    return Gadget(Hypergraph(vertices, tuple(edges)), u, fs, gadget_vertex_of, link_edge_of)


def gadget_family(g: Gadget, family: EulerFamily) -> EulerFamily:
    """Forward map: a family of H traversing u via each forced edge becomes
    a family of the gadgeted hypergraph (each ``f u`` expands to
    ``f' u_f e_f u``)."""
    u = g.fixed_vertex
    forced = set(g.forced_edges)
    new_trails = []
    for t in family.trails:
        vs: List[int] = [t.anchor_vertices[0]]
        es: List[int] = []
        for i, eid in enumerate(t.edge_ids):
            a, b = t.anchor_vertices[i], t.anchor_vertices[i + 1]
            if eid in forced:
                uf = g.gadget_vertex_of[eid]
                ef = g.link_edge_of[eid]
                if b == u:
                    es += [eid, ef]
                    vs += [uf, u]
                elif a == u:
                    es += [ef, eid]
                    vs += [uf, b]
                else:
                    raise TraversalConditionUnmet(
                        f"edge e{eid} is not traversed via vertex {u}"
                    )
            else:
                es.append(eid)
                vs.append(b)
        new_trails.append(ClosedTrail(tuple(vs), tuple(es)))
    return EulerFamily.of(new_trails)


def ungadget_family(g: Gadget, family: EulerFamily) -> EulerFamily:
    """Inverse map: contract each ``f' u_f e_f u`` back to ``f u``.

    The result is a family of the original hypergraph that traverses the
    fixed vertex via every forced edge.
    """
    gadget_vertices = set(g.gadget_vertex_of.values())
    vertex_to_f = {uf: f for f, uf in g.gadget_vertex_of.items()}
    u = g.fixed_vertex
    new_trails = []
    for t in family.trails:
        # rotate so the trail does not start at a gadget vertex; two gadget
        # vertices are never adjacent, so a safe start always exists
        start = None
        for i in range(t.length):
            if t.anchor_vertices[i] not in gadget_vertices:
                start = i
                break
        if start is None:
            raise MalformedGadgetTraversal("trail anchors only gadget vertices")
        rot = t.rotate_index(start)
        vs: List[int] = [rot.anchor_vertices[0]]
        es: List[int] = []
        i = 0
        while i < rot.length:
            eid = rot.edge_ids[i]
            nxt = rot.anchor_vertices[i + 1]
            if nxt in gadget_vertices:
                f = vertex_to_f[nxt]
                if i + 1 >= rot.length:
                    raise MalformedGadgetTraversal("trail ends inside a gadget")
                eid2 = rot.edge_ids[i + 1]
                after = rot.anchor_vertices[i + 2]
                pair = {eid, eid2}
                if pair != {f, g.link_edge_of[f]}:
                    raise MalformedGadgetTraversal(
                        f"gadget vertex u_{f} traversed via unexpected edges"
                    )
                # entering via f' means we exit to u, and vice versa
                es.append(f)
                vs.append(after)
                i += 2
            else:
                es.append(eid)
                vs.append(nxt)
                i += 1
        new_trails.append(ClosedTrail(tuple(vs), tuple(es)))
    out = EulerFamily.of(new_trails)
    for f in g.forced_edges:
        if not any(traverses_vertex_via(t, u, f) for t in out.trails):
            raise CertificateInvalid(f"ungadgeted family misses traversal of e{f} via {u}")
    return out


@dataclass(frozen=True)
class _Segment:
    enter_label: int  # original edge id of the f-edge entered from
    exit_label: int
    vertices: Tuple[int, ...]
    edges: Tuple[int, ...]  # already mapped to host ids


def _decompose_at_vertex(
    trail: ClosedTrail, u: int, inverse_map: Dict[int, int]
) -> List[_Segment]:
    """Cut a closed trail at every visit of u into labeled segments.

    The trail is rotated to its first visit of u; each segment runs from
    the edge leaving u (enter label) to the edge returning to u (exit
    label). Labels and interior edges are mapped through ``inverse_map``.
    """
    rot = trail.rotate_to(u)
    visit_positions = [i for i in range(rot.length) if rot.anchor_vertices[i] == u]
    visit_positions.append(rot.length)  # closing visit
    segments = []
    for a, b in zip(visit_positions, visit_positions[1:]):
        enter = inverse_map[rot.edge_ids[a]]
        exit_ = inverse_map[rot.edge_ids[b - 1]]
        vertices = rot.anchor_vertices[a + 1 : b]
        edges = tuple(inverse_map[e] for e in rot.edge_ids[a + 1 : b - 1])
        segments.append(_Segment(enter, exit_, vertices, edges))
    return segments


def link_families(
    h_alpha: Hypergraph,
    side0: Collapsed,
    side1: Collapsed,
    fam0: EulerFamily,
    fam1: EulerFamily,
    crossing_edges: Iterable[int],
) -> EulerFamily:
    """Splice the two collapsed-side families into a family of the host.

    ``side0`` collapses the V1 side (its family lives on V0) and vice
    versa. Each family must traverse its collapsed vertex via every
    crossing edge; anchor-disjointness then forces a unique trail through
    the collapsed vertex on each side. That trail is cut into segments and
    the segments of both sides are rejoined through the crossing edges.
    """
    crossing = sorted(set(crossing_edges))
    if len(crossing) < 2 or len(crossing) % 2 != 0:
        raise TraversalConditionUnmet("need a positive even number of crossing edges")
    sides = (side0, side1)
    families = (fam0, fam1)
    segments: List[List[_Segment]] = []
    rest_trails: List[ClosedTrail] = []
    for coll, fam in zip(sides, families):
        u = coll.collapsed_vertex
        inverse = {new: old for old, new in coll.edge_map.items()}
        through = [t for t in fam.trails if u in t.anchors]
        if len(through) != 1:
            raise TraversalConditionUnmet(
                f"expected exactly one trail through the collapsed vertex, got {len(through)}"
            )
        hub = through[0]
        for f in crossing:
            if not traverses_vertex_via(hub, u, coll.edge_map[f]):
                raise TraversalConditionUnmet(
                    f"collapsed vertex not traversed via crossing edge e{f}"
                )
        segments.append(_decompose_at_vertex(hub, u, inverse))
        for t in fam.trails:
            if t is not hub:
                rest_trails.append(t.relabel_edges(inverse))

    # each crossing label is attached to exactly one segment end per side
    attach: List[Dict[int, Tuple[int, str]]] = [{}, {}]
    for side_idx in range(2):
        for si, seg in enumerate(segments[side_idx]):
            attach[side_idx][seg.enter_label] = (si, "enter")
            attach[side_idx][seg.exit_label] = (si, "exit")

    linked: List[ClosedTrail] = []
    unused = set(crossing)
    while unused:
        start_label = min(unused)
        vs: List[int] = []
        es: List[int] = []
        side_idx = 0
        label = start_label
        steps = 0
        while True:
            steps += 1
            if steps > 2 * len(crossing) + 1:
                raise TraversalConditionUnmet("crossing-edge attachments do not close up")
            unused.discard(label)
            if label not in attach[side_idx]:
                raise TraversalConditionUnmet(
                    f"edge e{label} is not attached to a segment on side {side_idx}"
                )
            si, end = attach[side_idx][label]
            seg = segments[side_idx][si]
            if end == "enter":
                seg_vs, seg_es, out_label = seg.vertices, seg.edges, seg.exit_label
            else:
                seg_vs, seg_es = seg.vertices[::-1], seg.edges[::-1]
                out_label = seg.enter_label
            if es or vs:
                es.append(label)
            vs.extend(seg_vs)
            es.extend(seg_es)
            label = out_label
            side_idx = 1 - side_idx
            if label == start_label and side_idx == 0:
                es.append(label)
                vs.append(vs[0])
                break
        linked.append(ClosedTrail(tuple(vs), tuple(es)))

    # distinct linked cycles may share an anchor (a hub trail may revisit a
    # vertex in different segments); splice such cycles into one trail
    merged = True
    while merged:
        merged = False
        for i in range(len(linked)):
            for j in range(i + 1, len(linked)):
                shared = linked[i].anchors & linked[j].anchors
                if shared:
                    spliced = concatenate_at_anchor(linked[i], linked[j], min(shared))
                    linked = [t for k, t in enumerate(linked) if k not in (i, j)]
                    linked.append(spliced)
                    merged = True
                    break
            if merged:
                break

    out = EulerFamily.of(rest_trails + linked)
    report = verify_euler_family(h_alpha, out)
    if not report.ok:
        raise CertificateInvalid("; ".join(report.violations))
    return out
