"""The four recursive decision/construction solvers plus quick-check pruning.

Two strategy families: the standard reduction (recurse on components of the
derived hypergraph) and the collapse reduction (recurse on gadgeted
collapsed hypergraphs, then relink). Every recursive sub-instance must
strictly shrink in total size p; otherwise it is handed to the exact
oracle, which guarantees termination without giving up exactness.
"""

from __future__ import annotations

import enum
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, List, Optional, Tuple

from .assignments import (
    Assignment,
    BlockPartition,
    apply_assignment,
    enumerate_assignments,
    enumerate_bipartitions,
    multigraph_euler_status,
    quotient_multigraph,
    standard_blocks,
)
from .collapse import collapse, fixed_vertex_gadget, link_families, ungadget_family
from .core import Hypergraph, PeelVerdict, peel_degree_le1
from .cuts import cheap_minimal_cut, minimum_edge_cut
from .errors import HypergraphError
from .oracle import Constraint, Mode, oracle_euler
from .trails import EMPTY_FAMILY, ClosedTrail, EulerFamily, verify_euler_family


class Strategy(enum.Enum):
    STANDARD = "standard"
    COLLAPSE = "collapse"
    ORACLE = "oracle"


class CutChoice(enum.Enum):
    MINIMAL = "minimal"
    MINIMUM = "minimum"


@dataclass(frozen=True)
class SolverConfig:
    strategy: Strategy = Strategy.STANDARD
    # None picks the per-strategy default: minimal for the standard
    # reduction, minimum for the collapse reduction
    cut_choice: Optional[CutChoice] = None
    parallel: bool = False
    seed: int = 0
    oracle_size_budget: int = 100_000

    def effective_cut_choice(self) -> CutChoice:
        if self.cut_choice is not None:
            return self.cut_choice
        if self.strategy is Strategy.COLLAPSE:
            return CutChoice.MINIMUM
        return CutChoice.MINIMAL


@dataclass
class SearchStats:
    nodes: int = 0
    max_depth: int = 0
    assignments: int = 0
    oracle_fallbacks: int = 0
    elapsed: float = 0.0

    def merge(self, other: "SearchStats") -> None:
        self.nodes += other.nodes
        self.max_depth = max(self.max_depth, other.max_depth)
        self.assignments += other.assignments
        self.oracle_fallbacks += other.oracle_fallbacks


@dataclass(frozen=True)
class SolveOutcome:
    decision: bool
    certificate: Optional[EulerFamily]
    stats: SearchStats


@dataclass(frozen=True)
class QuickCheckResult:
    passed: bool
    reason: Optional[str] = None


def quick_checks(h: Hypergraph, mode: Mode) -> QuickCheckResult:
    """Cheap rejections on a connected, peeled hypergraph.

    In tour mode a cut edge is fatal because every vertex has degree >= 2
    after peeling. Family mode has no such rejection: a family may survive
    a cut edge.
    """
    if mode is Mode.TOUR and h.n >= 2:
        cut = minimum_edge_cut(h)
        if len(cut.edge_ids) == 1:
            eid = min(cut.edge_ids)
            return QuickCheckResult(False, f"cut edge e{eid}, min degree >= 2")
    return QuickCheckResult(True)


def _first_success(
    items: Iterable,
    branch: Callable,
    stats: SearchStats,
    parallel: bool,
) -> Optional[EulerFamily]:
    """Evaluate branches in order; return the first success.

    With ``parallel``, branches run in chunks on a thread pool; stats of
    branches up to and including the winner are merged in order, so the
    reported outcome and statistics match the sequential run exactly.
    """
    if not parallel:
        for it in items:
            result = branch(it, stats)
            if result is not None:
                return result
        return None
    items = list(items)
    workers = min(max(os.cpu_count() or 2, 2), 8)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for base in range(0, len(items), workers):
            chunk = items[base : base + workers]
            locals_ = [SearchStats() for _ in chunk]
            futures = [pool.submit(branch, it, st) for it, st in zip(chunk, locals_)]
            results = [f.result() for f in futures]
            for st, result in zip(locals_, results):
                stats.merge(st)
                if result is not None:
                    return result
    return None


def _oracle_fallback(h: Hypergraph, mode: Mode, cfg: SolverConfig, stats: SearchStats,
                     constraint: Optional[Constraint] = None) -> Tuple[bool, Optional[EulerFamily]]:
    stats.oracle_fallbacks += 1
    out = oracle_euler(h, mode, constraint, size_budget=cfg.oracle_size_budget)
    return out.decision, out.certificate


def _solve_any(
    h: Hypergraph,
    mode: Mode,
    cfg: SolverConfig,
    stats: SearchStats,
    depth: int,
    parent_size: Optional[int] = None,
) -> Tuple[bool, Optional[EulerFamily]]:
    """Dispatcher for possibly-disconnected instances.

    Enforces the shrink guard against ``parent_size`` (oracle fallback on a
    non-shrinking sub-instance) and decomposes into connected components.
    """
    if parent_size is not None and h.size >= parent_size:
        return _oracle_fallback(h, mode, cfg, stats)
    comps = h.components()
    pieces = [h.restrict_to_component(b) for b in comps.blocks]
    nonempty = [(sub, idm) for sub, idm in pieces if sub.m > 0]
    if not nonempty:
        if mode is Mode.TOUR:
            ok = h.is_trivial and h.is_empty
            return ok, EMPTY_FAMILY if ok else None
        return True, EMPTY_FAMILY
    if mode is Mode.TOUR and len(nonempty) > 1:
        return False, None
    trails: List[ClosedTrail] = []
    for sub, idm in nonempty:
        ok, fam = _solve_connected(sub, mode, cfg, stats, depth)
        if not ok:
            return False, None
        inverse = {new: old for old, new in idm.items()}
        trails.extend(t.relabel_edges(inverse) for t in fam.trails)
    return True, EulerFamily.of(trails)


def _solve_connected(
    h: Hypergraph, mode: Mode, cfg: SolverConfig, stats: SearchStats, depth: int
) -> Tuple[bool, Optional[EulerFamily]]:
    stats.nodes += 1
    stats.max_depth = max(stats.max_depth, depth)
    if cfg.strategy is Strategy.ORACLE:
        out = oracle_euler(h, mode, size_budget=cfg.oracle_size_budget)
        return out.decision, out.certificate
    if cfg.strategy is Strategy.COLLAPSE:
        return _solve_collapse(h, mode, cfg, stats, depth)
    return _solve_standard(h, mode, cfg, stats, depth)


def _preamble(
    h: Hypergraph, mode: Mode
) -> Tuple[Optional[Tuple[bool, Optional[EulerFamily]]], Optional[Hypergraph]]:
    """Peeling plus tour-mode quick checks; returns (early outcome, reduced)."""
    peel = peel_degree_le1(h)
    if peel.verdict is PeelVerdict.NO_EULER_FAMILY:
        return (False, None), None
    if peel.verdict is PeelVerdict.TRIVIAL_EULERIAN:
        return (True, EMPTY_FAMILY), None
    hr = peel.reduced
    if mode is Mode.TOUR:
        qc = quick_checks(hr, mode)
        if not qc.passed:
            return (False, None), None
    return None, hr


def _find_cut(hr: Hypergraph, cfg: SolverConfig):
    if cfg.effective_cut_choice() is CutChoice.MINIMUM:
        return minimum_edge_cut(hr)
    return cheap_minimal_cut(hr)


def _solve_standard(
    h: Hypergraph, mode: Mode, cfg: SolverConfig, stats: SearchStats, depth: int
) -> Tuple[bool, Optional[EulerFamily]]:
    early, hr = _preamble(h, mode)
    if early is not None:
        return early
    cut = _find_cut(hr, cfg)
    if mode is Mode.TOUR and len(cut.edge_ids) == 1:
        return False, None
    blocks = standard_blocks(hr, cut)
    if mode is Mode.TOUR:
        rest, rest_map = hr.remove_edges(cut.edge_ids)
        rest_comps = rest.components()
        nonempty_blocks = sum(
            1 for b in rest_comps.blocks if any(e and e <= b for e in rest.edges)
        )
        if len(cut.edge_ids) < nonempty_blocks:
            return False, None

    def try_alpha(a: Assignment, st: SearchStats) -> Optional[EulerFamily]:
        st.assignments += 1
        status = multigraph_euler_status(quotient_multigraph(cut, blocks, a))
        if mode is Mode.TOUR and not status.has_tour:
            return None
        if mode is Mode.FAMILY and not status.has_family:
            return None
        h_alpha, _ = apply_assignment(hr, cut, blocks, a)
        comps = h_alpha.components()
        pieces = [h_alpha.restrict_to_component(b) for b in comps.blocks]
        nonempty = [(sub, idm) for sub, idm in pieces if sub.m > 0]
        if mode is Mode.TOUR and len(nonempty) != 1:
            return None
        trails: List[ClosedTrail] = []
        for sub, idm in nonempty:
            ok, fam = _solve_any(sub, mode, cfg, st, depth + 1, parent_size=hr.size)
            if not ok:
                return None
            inverse = {new: old for old, new in idm.items()}
            trails.extend(t.relabel_edges(inverse) for t in fam.trails)
        # edge ids of the derived hypergraph coincide with the host's,
        # so the lift back to hr (and to the unpeeled input) is free
        return EulerFamily.of(trails)

    result = _first_success(
        enumerate_assignments(hr, cut, blocks),
        try_alpha,
        stats,
        cfg.parallel and depth == 0,
    )
    if result is None:
        return False, None
    return True, result


def _choose_bipartition(blocks: BlockPartition) -> BlockPartition:
    """Most balanced merge of blocks into two sides; deterministic ties."""
    best = None
    best_key = None
    for bip in enumerate_bipartitions(blocks):
        v0, v1 = bip.blocks
        key = (abs(len(v0) - len(v1)), tuple(sorted(v0)))
        if best_key is None or key < best_key:
            best, best_key = bip, key
    return best


def _solve_collapse(
    h: Hypergraph, mode: Mode, cfg: SolverConfig, stats: SearchStats, depth: int
) -> Tuple[bool, Optional[EulerFamily]]:
    early, hr = _preamble(h, mode)
    if early is not None:
        return early
    cut = _find_cut(hr, cfg)
    if mode is Mode.TOUR and len(cut.edge_ids) == 1:
        return False, None
    blocks = standard_blocks(hr, cut)
    if mode is Mode.FAMILY:
        bipartitions = [_choose_bipartition(blocks)]
    else:
        bipartitions = list(enumerate_bipartitions(blocks))
    skipped_wide_assignment = False

    def branches():
        for bip in bipartitions:
            for a in enumerate_assignments(hr, cut, bip):
                yield bip, a

    def try_branch(item, st: SearchStats) -> Optional[EulerFamily]:
        nonlocal skipped_wide_assignment
        bip, a = item
        st.assignments += 1
        crossing = sorted(a.preimage((0, 1)))
        if len(crossing) % 2 == 1:
            return None
        if mode is Mode.TOUR and len(crossing) > 2:
            skipped_wide_assignment = True
            return None
        h_alpha, _ = apply_assignment(hr, cut, bip, a)
        v0, v1 = bip.blocks
        if not crossing:
            return _branch_split(h_alpha, v0, v1, mode, cfg, st, depth, hr.size)
        return _branch_collapse(h_alpha, v0, v1, crossing, mode, cfg, st, depth, hr.size)

    result = _first_success(branches(), try_branch, stats, cfg.parallel and depth == 0)
    if result is not None:
        return True, result
    if mode is Mode.TOUR and skipped_wide_assignment:
        # assignments with more than two crossing edges are undecidable by
        # the collapse reduction; fall back to the standard tour solver
        return _solve_standard(hr, mode, cfg, stats, depth)
    return False, None


def _branch_split(
    h_alpha: Hypergraph,
    v0,
    v1,
    mode: Mode,
    cfg: SolverConfig,
    stats: SearchStats,
    depth: int,
    parent_size: int,
) -> Optional[EulerFamily]:
    """No crossing edges: the two sides are independent sub-instances."""
    sides = []
    for vs in (v0, v1):
        sub, idm = h_alpha.induced(vs)
        sides.append((sub, idm))
    if mode is Mode.TOUR:
        empty = [sub.m == 0 for sub, _ in sides]
        if sum(empty) != 1:
            return None
        sub, idm = sides[0] if empty[1] else sides[1]
        ok, fam = _solve_any(sub, mode, cfg, stats, depth + 1, parent_size=parent_size)
        if not ok:
            return None
        inverse = {new: old for old, new in idm.items()}
        return fam.relabel_edges(inverse)
    trails: List[ClosedTrail] = []
    for sub, idm in sides:
        if sub.m == 0:
            continue
        ok, fam = _solve_any(sub, mode, cfg, stats, depth + 1, parent_size=parent_size)
        if not ok:
            return None
        inverse = {new: old for old, new in idm.items()}
        trails.extend(t.relabel_edges(inverse) for t in fam.trails)
    return EulerFamily.of(trails)


def _branch_collapse(
    h_alpha: Hypergraph,
    v0,
    v1,
    crossing: List[int],
    mode: Mode,
    cfg: SolverConfig,
    stats: SearchStats,
    depth: int,
    parent_size: int,
) -> Optional[EulerFamily]:
    """Crossing edges present: solve both gadgeted collapsed sides and link."""
    collapses = []
    families = []
    for away in (v1, v0):  # side 0 collapses V1 and vice versa
        coll = collapse(h_alpha, away)
        forced = [coll.edge_map[f] for f in crossing]
        gadget = fixed_vertex_gadget(coll.hypergraph, coll.collapsed_vertex, forced)
        ok, fam = _solve_any(
            gadget.hypergraph, mode, cfg, stats, depth + 1, parent_size=parent_size
        )
        if not ok:
            return None
        families.append(ungadget_family(gadget, fam))
        collapses.append(coll)
    return link_families(
        h_alpha, collapses[0], collapses[1], families[0], families[1], crossing
    )


def solve(h: Hypergraph, mode: Mode, cfg: Optional[SolverConfig] = None) -> SolveOutcome:
    """Top-level entry; handles disconnected inputs by decomposition."""
    cfg = cfg or SolverConfig()
    stats = SearchStats()
    t0 = time.perf_counter()
    decision, certificate = _solve_any(h, mode, cfg, stats, depth=0)
    stats.elapsed = time.perf_counter() - t0
    if decision and certificate is not None:
        report = verify_euler_family(h, certificate)
        if not report.ok:
            raise HypergraphError(
                "internal error: solver produced an invalid certificate: "
                + "; ".join(report.violations)
            )
    return SolveOutcome(decision, certificate if decision else None, stats)


def solve_family_standard(h: Hypergraph, cfg: Optional[SolverConfig] = None) -> SolveOutcome:
    cfg = replace(cfg or SolverConfig(), strategy=Strategy.STANDARD)
    return solve(h, Mode.FAMILY, cfg)


def solve_tour_standard(h: Hypergraph, cfg: Optional[SolverConfig] = None) -> SolveOutcome:
    cfg = replace(cfg or SolverConfig(), strategy=Strategy.STANDARD)
    return solve(h, Mode.TOUR, cfg)


def solve_family_collapse(h: Hypergraph, cfg: Optional[SolverConfig] = None) -> SolveOutcome:
    cfg = replace(cfg or SolverConfig(), strategy=Strategy.COLLAPSE)
    return solve(h, Mode.FAMILY, cfg)


def solve_tour_collapse(h: Hypergraph, cfg: Optional[SolverConfig] = None) -> SolveOutcome:
    cfg = replace(cfg or SolverConfig(), strategy=Strategy.COLLAPSE)
    return solve(h, Mode.TOUR, cfg)
