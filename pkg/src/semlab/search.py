"""Exact decision and optimization engines.

All engines are complete: a None / proven answer means no solution exists
in the stated range, and running out of budget raises SearchBudgetExceeded
(surfaced as an Unknown result by `deficiency`) rather than guessing.

Engines are single-threaded and, in deterministic mode, explore label
candidates in increasing order over a fixed degree-then-index vertex order,
so repeated runs return identical witnesses.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from .graphs import Graph, bipartition, is_tree
from .labelings import (
    GracefulLabeling,
    ModularLabeling,
    SemCertificate,
    VertexLabeling,
    verify_sem,
)


class SearchBudgetExceeded(RuntimeError):
    """The node or time budget ran out before the search finished."""


@dataclass(frozen=True)
class SearchBudget:
    """Limits for one engine call. None means unlimited."""

    node_limit: int | None = None
    time_limit: float | None = None
    deterministic: bool = True

    def __post_init__(self):
        if self.node_limit is not None and self.node_limit <= 0:
            raise ValueError("node_limit must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive")


class _BudgetClock:
    """Shared node counter / deadline for one engine call."""

    __slots__ = ("nodes", "node_limit", "deadline", "_check_mask")

    def __init__(self, budget: SearchBudget | None):
        self.nodes = 0
        self.node_limit = budget.node_limit if budget else None
        self.deadline = (
            time.monotonic() + budget.time_limit
            if budget and budget.time_limit
            else None
        )
        self._check_mask = 0x3FF

    def tick(self) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise SearchBudgetExceeded(f"node limit exceeded after {self.nodes} nodes")
        if (
            self.deadline is not None
            and not self.nodes & self._check_mask
            and time.monotonic() > self.deadline
        ):
            raise SearchBudgetExceeded(f"time limit exceeded after {self.nodes} nodes")


def _search_order(g: Graph) -> list[int]:
    # Fixed exploration order: degree descending, index ascending.
    return sorted(range(g.p), key=lambda v: (-g.degree(v), v))


def _consecutive_sum_search(
    g: Graph, lo: int, hi: int, clock: _BudgetClock
) -> Optional[tuple[int, ...]]:
    """Injective labeling of V(g) into [lo, hi] whose q edge sums are
    duplicate-free and consecutive, or None if none exists.

    Returns labels indexed by vertex. Prunes on duplicate sums and on the
    sum span exceeding q (a q-element duplicate-free set is consecutive
    iff its span is exactly q).
    """
    p, q = g.p, g.q
    if hi - lo + 1 < p:
        return None
    if q == 0:
        return tuple(range(lo, lo + p))
    # q consecutive sums need span q inside [2*lo + 1, 2*hi - 1].
    if q > 2 * (hi - lo):
        return None

    order = _search_order(g)
    pos_of = {v: i for i, v in enumerate(order)}
    nbrs_before = [
        [pos_of[u] for u in g.neighbors(v) if pos_of[u] < i]
        for i, v in enumerate(order)
    ]

    labels = [0] * p
    used = 0
    sums_mask = 0
    found: Optional[list[int]] = None

    def place(i: int, min_s: int, max_s: int) -> bool:
        nonlocal used, sums_mask, found
        if i == p:
            found = labels.copy()
            return True
        before = nbrs_before[i]
        for c in range(lo, hi + 1):
            if used >> c & 1:
                continue
            clock.tick()
            add = 0
            new_min, new_max = min_s, max_s
            ok = True
            for j in before:
                s = c + labels[j]
                if (sums_mask | add) >> s & 1:
                    ok = False
                    break
                add |= 1 << s
                if s < new_min:
                    new_min = s
                if s > new_max:
                    new_max = s
            if not ok:
                continue
            if new_max - new_min + 1 > q:
                continue
            labels[i] = c
            used |= 1 << c
            sums_mask |= add
            if place(i + 1, new_min, new_max):
                return True
            used &= ~(1 << c)
            sums_mask &= ~add
        return False

    if not place(0, 1 << 30, 0):
        return None
    assert found is not None
    out = [0] * p
    for i, v in enumerate(order):
        out[v] = found[i]
    return tuple(out)


def find_sem_labeling(
    g: Graph, max_label: int, budget: SearchBudget | None = None
) -> Optional[VertexLabeling]:
    """Injective labeling into [1, max_label] with consecutive edge sums.

    None means provably no such labeling exists; budget exhaustion raises
    SearchBudgetExceeded instead.
    """
    if max_label < g.p:
        raise ValueError("max_label must be at least the graph order")
    clock = _BudgetClock(budget)
    labels = _consecutive_sum_search(g, 1, max_label, clock)
    return VertexLabeling(labels) if labels is not None else None


@dataclass(frozen=True)
class DeficiencyResult:
    """Outcome of a deficiency computation.

    finite: `value` isolated vertices suffice and `witness` proves it, and
    no smaller count works (exhaustive below). infinite: `certificate`
    proves no count works. unknown: searches up to `searched_cap` isolated
    vertices were exhausted (or the budget ran out) without an answer.
    """

    kind: str
    value: int | None = None
    witness: SemCertificate | None = None
    certificate: object | None = None
    searched_cap: int | None = None

    @staticmethod
    def finite(value: int, witness: SemCertificate) -> "DeficiencyResult":
        return DeficiencyResult(kind="finite", value=value, witness=witness)

    @staticmethod
    def infinite(certificate) -> "DeficiencyResult":
        return DeficiencyResult(kind="infinite", certificate=certificate)

    @staticmethod
    def unknown(searched_cap: int) -> "DeficiencyResult":
        return DeficiencyResult(kind="unknown", searched_cap=searched_cap)


def deficiency(
    g: Graph, cap: int, budget: SearchBudget | None = None
) -> DeficiencyResult:
    """Exact super edge-magic deficiency, searched up to `cap` isolates.

    Tries the infinite-deficiency certificate first; otherwise searches
    injective labelings into [1, p], [1, p+1], ... in order, so the first
    success is the exact minimum (unused labels go to isolated vertices).
    Exhausting the cap, or the budget, yields an unknown result.
    """
    if cap < 0:
        raise ValueError("cap must be >= 0")
    from .sidon import certify_infinite_deficiency

    cert = certify_infinite_deficiency(g)
    if cert is not None:
        return DeficiencyResult.infinite(cert)
    clock = _BudgetClock(budget)
    for extra in range(cap + 1):
        try:
            labels = _consecutive_sum_search(g, 1, g.p + extra, clock)
        except SearchBudgetExceeded:
            return DeficiencyResult.unknown(extra)
        if labels is not None:
            witness = verify_sem(g, labels, extra)
            return DeficiencyResult.finite(extra, witness)
    return DeficiencyResult.unknown(cap)


def strength(g: Graph, budget: SearchBudget | None = None) -> int:
    """Exact strength: the minimum over all bijective numberings onto
    [1, p] of the maximum edge sum.

    Branch and bound assigning labels p, p-1, ... to vertices (low-degree
    vertices tried first); a partial assignment is cut off when some
    labelled vertex with d unlabelled neighbours already forces a sum of
    at least label + d, since those neighbours get distinct labels below
    the current one.
    """
    if g.q == 0:
        raise ValueError("strength is undefined for edgeless graphs")
    clock = _BudgetClock(budget)
    p = g.p
    adj = g.adj
    vertex_order = sorted(range(p), key=lambda v: (g.degree(v), v))
    best = 2 * p  # above any achievable maximum sum

    labels = [0] * p
    unlabeled = (1 << p) - 1

    def assign(next_label: int, cur_max: int) -> None:
        nonlocal best, unlabeled
        if cur_max >= best:
            return
        if next_label == 0:
            best = cur_max
            return
        # Admissible bound: a labelled vertex with d unlabelled neighbours
        # will see a sum >= its label + d (labels below next_label are
        # distinct positive integers).
        rest = (1 << p) - 1 - unlabeled
        scan = rest
        while scan:
            v = (scan & -scan).bit_length() - 1
            scan &= scan - 1
            d = (adj[v] & unlabeled).bit_count()
            if d and labels[v] + d >= best:
                return
        for v in vertex_order:
            if not unlabeled >> v & 1:
                continue
            clock.tick()
            realized = cur_max
            ok = True
            nb = adj[v] & ~unlabeled
            while nb:
                u = (nb & -nb).bit_length() - 1
                nb &= nb - 1
                s = next_label + labels[u]
                if s >= best:
                    ok = False
                    break
                if s > realized:
                    realized = s
            if not ok:
                continue
            labels[v] = next_label
            unlabeled &= ~(1 << v)
            assign(next_label - 1, realized)
            unlabeled |= 1 << v
            labels[v] = 0

    assign(p, 0)
    return best


def find_alpha_valuation(
    g: Graph, budget: SearchBudget | None = None
) -> Optional[GracefulLabeling]:
    """Graceful labeling with a boundary value, or None.

    Boundary-valuations force every edge to straddle the boundary, so the
    graph must be bipartite (rejected immediately otherwise). The search
    fixes the boundary and the side orientation of each component, then
    backtracks over vertices; q distinct differences in [1, q] are
    automatically all of {1, ..., q}.
    """
    if g.q == 0:
        raise ValueError("boundary-valuation search needs at least one edge")
    parts = bipartition(g)
    if parts is None:
        return None
    clock = _BudgetClock(budget)
    order = _search_order(g)
    pos_of = {v: i for i, v in enumerate(order)}
    nbrs_before = [
        [pos_of[u] for u in g.neighbors(v) if pos_of[u] < i]
        for i, v in enumerate(order)
    ]

    # Component side masks, each component orientable independently.
    comp_sides: list[tuple[int, int]] = []
    seen = 0
    for s in range(g.p):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = 1 << s
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            grow = g.adj[v] & ~comp
            comp |= grow
            frontier |= grow
        seen |= comp
        comp_sides.append((comp & parts[0], comp & parts[1]))

    p = g.p
    labels = [0] * p
    used = 0
    diffs = 0

    def place(i: int, boundary: int, low_mask: int) -> bool:
        nonlocal used, diffs
        if i == p:
            return True
        v = order[i]
        if g.degree(v) == 0:
            lo_c, hi_c = 0, g.q
        elif low_mask >> v & 1:
            lo_c, hi_c = 0, boundary
        else:
            lo_c, hi_c = boundary + 1, g.q
        for c in range(lo_c, hi_c + 1):
            if used >> c & 1:
                continue
            clock.tick()
            add = 0
            ok = True
            for j in nbrs_before[i]:
                d = abs(c - labels[j])
                if (diffs | add) >> d & 1:
                    ok = False
                    break
                add |= 1 << d
            if not ok:
                continue
            labels[i] = c
            used |= 1 << c
            diffs |= add
            if place(i + 1, boundary, low_mask):
                return True
            used &= ~(1 << c)
            diffs &= ~add
        return False

    for boundary in range(g.q):
        for flips in range(1 << len(comp_sides)):
            low_mask = 0
            low_count = 0
            hi_count = 0
            for idx, (a, b) in enumerate(comp_sides):
                lo_side = b if flips >> idx & 1 else a
                hi_side = a if flips >> idx & 1 else b
                low_mask |= lo_side
                low_count += lo_side.bit_count()
                hi_count += hi_side.bit_count()
            if low_count > boundary + 1 or hi_count > g.q - boundary:
                continue
            if place(0, boundary, low_mask):
                out = [0] * p
                for i, v in enumerate(order):
                    out[v] = labels[i]
                return GracefulLabeling(tuple(out), boundary)
    return None


def deficiency_upper_via_alpha(
    g: Graph, budget: SearchBudget | None = None
) -> Optional[int]:
    """Upper bound q - p + 1 on the deficiency, valid whenever the graph
    (no isolated vertices) has a boundary-valuation; None if none found."""
    if any(g.degree(v) == 0 for v in range(g.p)):
        raise ValueError("bound requires a graph without isolated vertices")
    labeling = find_alpha_valuation(g, budget)
    if labeling is None:
        return None
    return g.q - g.p + 1


def find_harmonious(
    g: Graph, budget: SearchBudget | None = None
) -> Optional[ModularLabeling]:
    """Labeling into Z_q with pairwise distinct edge sums mod q, or None.

    Trees get one repeated vertex label (they have one more vertex than
    residues); all other graphs are labelled injectively.
    """
    if g.q == 0:
        raise ValueError("harmonious search needs at least one edge")
    allowance = 1 if is_tree(g) else 0
    clock = _BudgetClock(budget)
    p, q = g.p, g.q
    if p - allowance > q:
        return None
    order = _search_order(g)
    pos_of = {v: i for i, v in enumerate(order)}
    nbrs_before = [
        [pos_of[u] for u in g.neighbors(v) if pos_of[u] < i]
        for i, v in enumerate(order)
    ]

    labels = [0] * p
    counts = [0] * q
    repeats_left = allowance
    residues = 0

    def place(i: int) -> bool:
        nonlocal repeats_left, residues
        if i == p:
            return True
        for c in range(q):
            if counts[c] >= 1 and (repeats_left == 0 or counts[c] >= 2):
                continue
            clock.tick()
            add = 0
            ok = True
            for j in nbrs_before[i]:
                r = (c + labels[j]) % q
                if (residues | add) >> r & 1:
                    ok = False
                    break
                add |= 1 << r
            if not ok:
                continue
            labels[i] = c
            counts[c] += 1
            if counts[c] == 2:
                repeats_left -= 1
            residues |= add
            if place(i + 1):
                return True
            if counts[c] == 2:
                repeats_left += 1
            counts[c] -= 1
            residues &= ~add
        return False

    if not place(0):
        return None
    out = [0] * p
    for i, v in enumerate(order):
        out[v] = labels[i]
    return ModularLabeling(tuple(out), allowance)


def find_sequential(
    g: Graph, budget: SearchBudget | None = None
) -> Optional[ModularLabeling]:
    """Injective labeling whose integer edge sums are q consecutive values.

    Labels come from [0, q-1], or [0, q] for trees (one extra vertex).
    """
    if g.q == 0:
        raise ValueError("sequential search needs at least one edge")
    top = g.q if is_tree(g) else g.q - 1
    clock = _BudgetClock(budget)
    labels = _consecutive_sum_search(g, 0, top, clock)
    if labels is None:
        return None
    return ModularLabeling(labels, 0)
