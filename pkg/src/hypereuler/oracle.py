"""Exact reference implementations: exhaustive Euler family/tour search
(optionally constrained to traverse a fixed vertex via fixed edges),
brute-force minimum cut, and instance generators.

This module is the correctness baseline; no attempt is made to be fast on
large inputs.
"""

from __future__ import annotations

import enum
import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

from .core import Hypergraph
from .cuts import EdgeCut, boundary, _cut_size
from .errors import BadSpec, BudgetExceeded, Disconnected, TooLarge
from .trails import ClosedTrail, EulerFamily, EMPTY_FAMILY

DEFAULT_SIZE_BUDGET = 200


class Mode(enum.Enum):
    FAMILY = "family"
    TOUR = "tour"


@dataclass(frozen=True)
class Constraint:
    """Require traversal of ``vertex`` via each edge in ``via_edges``."""

    vertex: int
    via_edges: FrozenSet[int]


@dataclass
class OracleStats:
    nodes: int = 0
    elapsed: float = 0.0


@dataclass(frozen=True)
class OracleOutcome:
    decision: bool
    certificate: Optional[EulerFamily]
    stats: OracleStats


class _Searcher:
    """Backtracking over closed-trail decompositions.

    The current trail extends from its head by the least unused edge id and
    least next vertex; on exhaustion it may close (if back at its start)
    and a new trail opens at the least uncovered edge. Anchor-disjointness
    against completed trails is enforced throughout.
    """

    def __init__(self, h: Hypergraph, mode: Mode, constraint: Optional[Constraint]):
        self.h = h
        self.mode = mode
        self.constraint = constraint
        self.stats = OracleStats()
        self.result: Optional[List[ClosedTrail]] = None

    def _edge_allowed(self, eid: int, a: int, b: int) -> bool:
        c = self.constraint
        if c is not None and eid in c.via_edges and c.vertex not in (a, b):
            return False
        return True

    def run(self) -> Optional[EulerFamily]:
        self._search(frozenset(range(self.h.m)), [], set())
        if self.result is None:
            return None
        return EulerFamily.of(self.result)

    def _search(self, unused: FrozenSet[int], completed: List[ClosedTrail], blocked: Set[int]) -> bool:
        self.stats.nodes += 1
        if not unused:
            self.result = list(completed)
            return True
        if self.mode is Mode.TOUR and completed:
            return False
        start_edge = min(unused)
        e = self.h.edges[start_edge]
        if len(e) < 2:
            return False
        for a, b in itertools.combinations(sorted(e), 2):
            if a in blocked or b in blocked:
                continue
            if not self._edge_allowed(start_edge, a, b):
                continue
            if self._extend(unused - {start_edge}, completed, blocked, a, [a, b], [start_edge]):
                return True
        return False

    def _extend(
        self,
        unused: FrozenSet[int],
        completed: List[ClosedTrail],
        blocked: Set[int],
        start: int,
        vs: List[int],
        es: List[int],
    ) -> bool:
        self.stats.nodes += 1
        head = vs[-1]
        if head == start and len(es) >= 2:
            trail = ClosedTrail(tuple(vs), tuple(es))
            if self._search(unused, completed + [trail], blocked | trail.anchors):
                return True
        for eid in sorted(unused):
            e = self.h.edges[eid]
            if head not in e or len(e) < 2:
                continue
            for nxt in sorted(e - {head}):
                if nxt in blocked:
                    continue
                if not self._edge_allowed(eid, head, nxt):
                    continue
                vs.append(nxt)
                es.append(eid)
                if self._extend(unused - {eid}, completed, blocked, start, vs, es):
                    return True
                vs.pop()
                es.pop()
        return False


def oracle_euler(
    h: Hypergraph,
    mode: Mode = Mode.FAMILY,
    constraint: Optional[Constraint] = None,
    size_budget: int = DEFAULT_SIZE_BUDGET,
) -> OracleOutcome:
    """Exhaustive Euler family / tour decision with certificate.

    Disconnected inputs are decomposed per component; the constraint is
    applied inside the component holding its vertex. Tour mode requires a
    unique non-empty component.
    """
    if h.size > size_budget:
        raise BudgetExceeded(f"size {h.size} exceeds oracle budget {size_budget}")
    t0 = time.perf_counter()
    comps = h.components()
    stats = OracleStats()

    def finish(decision: bool, cert: Optional[EulerFamily]) -> OracleOutcome:
        stats.elapsed = time.perf_counter() - t0
        return OracleOutcome(decision, cert, stats)

    pieces: List[Tuple[Hypergraph, Dict[int, int]]] = []
    for block in comps.blocks:
        sub, id_map = h.restrict_to_component(block)
        pieces.append((sub, id_map))
    nonempty = [(sub, id_map) for sub, id_map in pieces if sub.m > 0]
    if h.has_small_edge:
        return finish(False, None)
    if mode is Mode.TOUR and len(nonempty) > 1:
        return finish(False, None)
    if not nonempty:
        if constraint is not None and constraint.via_edges:
            return finish(False, None)
        if mode is Mode.TOUR and not h.is_trivial:
            # edgeless but non-trivial: no tour exists and the trivial
            # exception does not apply
            return finish(False, None)
        return finish(True, EMPTY_FAMILY)

    trails: List[ClosedTrail] = []
    for sub, id_map in nonempty:
        local_constraint = None
        if constraint is not None and constraint.via_edges:
            local_edges = frozenset(
                id_map[e] for e in constraint.via_edges if e in id_map
            )
            if local_edges and constraint.vertex not in sub.vertices:
                return finish(False, None)
            if len(local_edges) != len(constraint.via_edges):
                # some required edge lives in another component
                if constraint.vertex in sub.vertices or local_edges:
                    return finish(False, None)
            if local_edges:
                local_constraint = Constraint(constraint.vertex, local_edges)
        searcher = _Searcher(sub, mode, local_constraint)
        fam = searcher.run()
        stats.nodes += searcher.stats.nodes
        if fam is None:
            return finish(False, None)
        inverse = {new: old for old, new in id_map.items()}
        trails.extend(t.relabel_edges(inverse) for t in fam.trails)
    return finish(True, EulerFamily.of(trails))


def oracle_min_cut(h: Hypergraph) -> EdgeCut:
    """Exhaustive minimum cut; lexicographically least side among minimizers."""
    if h.n < 2 or h.n > 15:
        raise TooLarge("oracle_min_cut handles 2 <= |V| <= 15")
    if not h.is_connected:
        raise Disconnected("oracle_min_cut requires a connected hypergraph")
    best: Optional[Tuple[int, Tuple[int, ...]]] = None
    vs = sorted(h.vertices)
    for r in range(1, h.n):
        for combo in itertools.combinations(vs, r):
            s = frozenset(combo)
            sz = _cut_size(h, s)
            key = (sz, combo)
            if best is None or key < best:
                best = key
    return boundary(h, frozenset(best[1]))


class GenModel(enum.Enum):
    UNIFORM = "uniform"
    EXHAUSTIVE = "exhaustive"


@dataclass(frozen=True)
class GenSpec:
    max_vertices: int
    max_edges: int
    min_edge_size: int = 2
    max_edge_size: int = 4
    seed: int = 0
    model: GenModel = GenModel.UNIFORM

    def validate(self) -> None:
        if self.max_vertices < 1 or self.max_edges < 0:
            raise BadSpec("need max_vertices >= 1 and max_edges >= 0")
        if self.min_edge_size < 2 or self.max_edge_size < self.min_edge_size:
            raise BadSpec("edge sizes must satisfy 2 <= min <= max")


def canonical_form(h: Hypergraph) -> Tuple:
    """Lexicographically least representation over vertex relabelings.

    Brute force over permutations; intended for small instances (n <= ~7).
    """
    vs = sorted(h.vertices)
    best = None
    for perm in itertools.permutations(range(1, len(vs) + 1)):
        relabel = dict(zip(vs, perm))
        edges = tuple(sorted(tuple(sorted(relabel[v] for v in e)) for e in h.edges))
        key = (len(vs), edges)
        if best is None or key < best:
            best = key
    return best


def _exhaustive_stream(spec: GenSpec) -> Iterator[Hypergraph]:
    seen = set()
    for n in range(1, spec.max_vertices + 1):
        vs = list(range(1, n + 1))
        candidates = []
        for k in range(spec.min_edge_size, min(spec.max_edge_size, n) + 1):
            candidates.extend(frozenset(c) for c in itertools.combinations(vs, k))
        candidates.sort(key=lambda e: tuple(sorted(e)))
        for m in range(0, spec.max_edges + 1):
            for combo in itertools.combinations_with_replacement(candidates, m):
                h = Hypergraph(frozenset(vs), tuple(combo))
                if h.m == 0 or not h.is_connected:
                    continue
                key = canonical_form(h)
                if key in seen:
                    continue
                seen.add(key)
                yield Hypergraph(frozenset(vs), tuple(
                    frozenset(e) for e in key[1]
                ))


def _uniform_stream(spec: GenSpec) -> Iterator[Hypergraph]:
    rng = random.Random(spec.seed)
    while True:
        n = rng.randint(2, spec.max_vertices) if spec.max_vertices >= 2 else 1
        m = rng.randint(1, max(1, spec.max_edges))
        vs = list(range(1, n + 1))
        edges = []
        for _ in range(m):
            hi = min(spec.max_edge_size, n)
            lo = min(spec.min_edge_size, hi)
            k = rng.randint(lo, hi)
            edges.append(frozenset(rng.sample(vs, k)))
        h = Hypergraph(frozenset(vs), tuple(edges))
        if h.is_connected and not h.has_small_edge:
            yield h


def generate(spec: GenSpec) -> Iterator[Hypergraph]:
    """Seeded, reproducible instance stream.

    Exhaustive mode emits every connected hypergraph within the bounds
    exactly once up to relabeling; uniform mode is an infinite stream of
    random connected instances.
    """
    spec.validate()
    if spec.model is GenModel.EXHAUSTIVE:
        return _exhaustive_stream(spec)
    return _uniform_stream(spec)
