"""Exact decycling-type invariants via chordless-cycle transversals.

Deleting a vertex set S from G leaves exactly the chordless cycles of G that
avoid S (a chord only ever involves the cycle's own vertices), so:

  * G - S is acyclic  iff  S meets every chordless cycle of G
    (a surviving cycle would contain a surviving chordless cycle), and
  * G - S is ternary  iff  S meets every chordless cycle of length
    divisible by 3.

The solvers therefore scan candidate subsets of the vertices that lie on the
relevant cycles, in increasing size and lexicographic order, testing the
transversal condition; the winning witness is re-verified with the
independent acyclicity/ternary predicates.  For middle-bound work the
inclusion-minimal transversals are enumerated as complements of the maximal
cycle-free vertex sets, via subset tables when the cycle-covered universe is
small and a branching enumerator past that.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

import numpy as np

from .budget import Budget, ensure_budget
from .cycles import _chordless_iter, is_ternary
from .graph import Graph, bits, iter_bits, mask_of
from .indpoly import independent_set_count

_TABLE_LIMIT = 18  # build 2^u subset tables up to this universe size
_NUMPY_LIMIT = 8  # pure-python tables below this, vectorized above


@dataclass(frozen=True)
class DecyclingResult:
    """Decycling invariants of one graph, with verified witnesses."""

    phi: int
    phi_witness: tuple[int, ...]
    phi3: int
    phi3_witness: tuple[int, ...]
    nu: int
    middle_bound: int
    middle_witness: tuple[int, ...]


def cyclomatic_number(g: Graph) -> int:
    """e - n + q: the number of edges outside a spanning forest."""
    return g.edge_count() - g.n + g.component_count()


# -- transversal machinery -----------------------------------------------------


def _cycle_masks(g: Graph, budget: Budget) -> tuple[list[int], list[int]]:
    """Vertex masks of all chordless cycles, and of those with length % 3 == 0.

    Distinct chordless cycles have distinct vertex sets (the set induces the
    cycle), so no dedup is needed.
    """
    all_masks: list[int] = []
    tern_masks: list[int] = []
    for cyc in _chordless_iter(g.adj, g.n, budget):
        m = mask_of(cyc)
        all_masks.append(m)
        if len(cyc) % 3 == 0:
            tern_masks.append(m)
    return all_masks, tern_masks


def _compress(universe: int) -> tuple[list[int], dict[int, int]]:
    verts = list(iter_bits(universe))
    return verts, {v: i for i, v in enumerate(verts)}


def _superset_table(masks: list[int], index: dict[int, int], u: int) -> "np.ndarray | bytearray":
    """Table over subsets of the compressed universe: entry S is truthy when
    some cycle mask is contained in S."""
    size = 1 << u
    seeds = []
    for m in masks:
        c = 0
        for v in iter_bits(m):
            c |= 1 << index[v]
        seeds.append(c)
    if u >= _NUMPY_LIMIT:
        table = np.zeros(size, dtype=bool)
        table[seeds] = True
        for i in range(u):
            view = table.reshape(-1, 2, 1 << i)
            view[:, 1, :] |= view[:, 0, :]
        return table
    table = bytearray(size)
    for c in seeds:
        table[c] = 1
    for i in range(u):
        bit = 1 << i
        for s in range(size):
            if s & bit and table[s ^ bit]:
                table[s] = 1
    return table


def _min_transversal(
    masks: list[int], budget: Budget
) -> tuple[int, int]:
    """Smallest vertex set meeting every mask: (size, witness mask).

    The witness is lexicographically smallest among minimum solutions.
    """
    if not masks:
        return 0, 0
    universe = 0
    for m in masks:
        universe |= m
    verts, index = _compress(universe)
    u = len(verts)
    if u <= _TABLE_LIMIT:
        table = _superset_table(masks, index, u)
        full = (1 << u) - 1
        for k in range(u + 1):
            for combo in combinations(range(u), k):
                budget.spend()
                free = full
                for i in combo:
                    free ^= 1 << i
                if not table[free]:
                    return k, mask_of(verts[i] for i in combo)
        raise AssertionError("full universe is always a transversal")
    size, witness = _branch_min_transversal(masks, budget)
    # Lexicographic tie-break once the optimum size is known.
    for combo in combinations(verts, size):
        budget.spend()
        m = mask_of(combo)
        if all(m & cm for cm in masks):
            return size, m
    return size, witness


def _branch_min_transversal(masks: list[int], budget: Budget) -> tuple[int, int]:
    """Branch and bound on the first unhit cycle mask."""
    best_size = len(masks) + 1
    best_mask = 0
    # Greedy warm start: repeatedly take the vertex hitting the most masks.
    chosen = 0
    left = list(masks)
    while left:
        counts: dict[int, int] = {}
        for m in left:
            for v in iter_bits(m):
                counts[v] = counts.get(v, 0) + 1
        v = max(counts, key=lambda w: (counts[w], -w))
        chosen |= 1 << v
        left = [m for m in left if not m & chosen]
    best_size, best_mask = chosen.bit_count(), chosen

    def rec(chosen_mask: int, count: int) -> None:
        nonlocal best_size, best_mask
        budget.spend()
        if count >= best_size:
            return
        first = next((m for m in masks if not m & chosen_mask), None)
        if first is None:
            best_size, best_mask = count, chosen_mask
            return
        for v in iter_bits(first):
            rec(chosen_mask | 1 << v, count + 1)

    rec(0, 0)
    return best_size, best_mask


def _minimal_transversal_masks(
    masks: list[int],
    budget: Budget,
    cap: "int | None" = None,
) -> tuple[list[int], bool]:
    """All inclusion-minimal transversals, sorted by (size, vertex tuple)."""
    if not masks:
        return [0], False
    universe = 0
    for m in masks:
        universe |= m
    verts, index = _compress(universe)
    u = len(verts)
    out: list[int] = []
    truncated = False
    if u <= _TABLE_LIMIT:
        table = _superset_table(masks, index, u)
        full = (1 << u) - 1
        # Minimal transversals are complements (in the universe) of the
        # maximal cycle-free subsets.
        if isinstance(table, bytearray):
            for w in range(full + 1):
                budget.spend()
                if table[w]:
                    continue
                missing = full ^ w
                if all(table[w | 1 << i] for i in iter_bits(missing)):
                    out.append(missing)
        else:
            ok = ~table
            for i in range(u):
                view_ok = ok.reshape(-1, 2, 1 << i)
                view_bad = table.reshape(-1, 2, 1 << i)
                view_ok[:, 0, :] &= view_bad[:, 1, :]
            for w in np.nonzero(ok)[0]:
                out.append(full ^ int(w))
        out = [_decompress(m, verts) for m in out]
    else:
        seen: list[int] = []

        def emit(mask: int) -> bool:
            seen.append(mask)
            return cap is not None and len(seen) >= cap

        truncated = _branch_minimal(masks, budget, emit)
        out = seen
    out.sort(key=lambda m: (m.bit_count(), bits(m)))
    if cap is not None and len(out) > cap:
        out = out[:cap]
        truncated = True
    return out, truncated


def _decompress(cmask: int, verts: list[int]) -> int:
    m = 0
    for i in iter_bits(cmask):
        m |= 1 << verts[i]
    return m


def _branch_minimal(
    masks: list[int], budget: Budget, emit: Callable[[int], bool]
) -> bool:
    """Enumerate minimal transversals by branching on the first unhit mask.

    Branch v forbids the vertices tried before v within that mask, which
    yields every minimal transversal exactly once; non-minimal hitting sets
    can still surface and are filtered with the private-cycle test.
    """
    stop = False

    def is_minimal(chosen: int) -> bool:
        for v in iter_bits(chosen):
            vbit = 1 << v
            if not any((m & chosen) == vbit for m in masks):
                return False
        return True

    def rec(chosen: int, banned: int) -> None:
        nonlocal stop
        if stop:
            return
        budget.spend()
        first = next((m for m in masks if not m & chosen), None)
        if first is None:
            if is_minimal(chosen) and emit(chosen):
                stop = True
            return
        tried = 0
        for v in iter_bits(first & ~banned):
            rec(chosen | 1 << v, banned | tried)
            tried |= 1 << v
            if stop:
                return

    rec(0, 0)
    return stop


def _count_independent(adj: tuple[int, ...], mask: int) -> int:
    """Number of independent sets inside the induced subgraph on ``mask``."""
    verts = list(iter_bits(mask))
    d = len(verts)
    index = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        row = 0
        for ub in iter_bits(adj[v] & mask):
            row |= 1 << index[ub]
        rows.append(row)
    count = 1  # the empty set
    indep = bytearray(1 << d)
    indep[0] = 1
    for sub in range(1, 1 << d):
        low = sub & -sub
        rest = sub ^ low
        if indep[rest] and not rows[low.bit_length() - 1] & rest:
            indep[sub] = 1
            count += 1
    return count


# -- public operations -----------------------------------------------------------


def min_decycling(g: Graph, budget: "Budget | None" = None) -> tuple[int, tuple[int, ...]]:
    """Minimum number of vertex deletions leaving a forest, with a witness."""
    budget = ensure_budget(budget)
    all_masks, _ = _cycle_masks(g, budget)
    size, witness = _min_transversal(all_masks, budget)
    if not g.delete_vertices(witness).is_acyclic():
        raise AssertionError("decycling witness failed the acyclicity re-check")
    return size, tuple(g.labels[v] for v in iter_bits(witness))


def min_ternary_decycling(g: Graph, budget: "Budget | None" = None) -> tuple[int, tuple[int, ...]]:
    """Minimum number of deletions leaving a ternary graph, with a witness."""
    budget = ensure_budget(budget)
    _, tern_masks = _cycle_masks(g, budget)
    size, witness = _min_transversal(tern_masks, budget)
    if not is_ternary(g.delete_vertices(witness), budget=budget):
        raise AssertionError("ternary decycling witness failed the ternary re-check")
    return size, tuple(g.labels[v] for v in iter_bits(witness))


def minimal_ternary_decycling_sets(
    g: Graph,
    cap: "int | None" = None,
    budget: "Budget | None" = None,
) -> tuple[list[tuple[int, ...]], bool]:
    """All inclusion-minimal ternary decycling sets, up to ``cap``.

    Returns ``(sets, truncated)``; a truncated list must not be used to claim
    global minima.  Every returned set is verified to meet each cycle of
    length divisible by 3 and to be minimal with that property.
    """
    budget = ensure_budget(budget)
    _, tern_masks = _cycle_masks(g, budget)
    out, truncated = _minimal_transversal_masks(tern_masks, budget, cap=cap)
    for m in out:
        if any(not m & cm for cm in tern_masks):
            raise AssertionError("emitted set misses a cycle")
    return [tuple(g.labels[v] for v in iter_bits(m)) for m in out], truncated


def middle_bound(g: Graph, budget: "Budget | None" = None) -> tuple[int, tuple[int, ...]]:
    """Minimum independent-set count of G[D] over ternary decycling sets D.

    The minimum is attained at an inclusion-minimal D because every
    independent set of G[D] is one of G[D'] whenever D is contained in D'.
    Returns the count and a lexicographically-smallest attaining witness.
    """
    budget = ensure_budget(budget)
    _, tern_masks = _cycle_masks(g, budget)
    if not tern_masks:
        return 1, ()
    candidates, truncated = _minimal_transversal_masks(tern_masks, budget, cap=None)
    if truncated:
        raise AssertionError("uncapped enumeration reported truncation")
    best = None
    best_mask = 0
    for m in candidates:
        budget.spend()
        count = _count_independent(g.adj, m)
        if best is None or count < best:
            best, best_mask = count, m
    # Cross-check the winner against the independent engine.
    engine_count = independent_set_count(g.induced_subgraph(best_mask), budget=budget)
    if engine_count != best:
        raise AssertionError("independent-set count mismatch on the middle witness")
    return best, tuple(g.labels[v] for v in iter_bits(best_mask))


def decycling_summary(g: Graph, budget: "Budget | None" = None) -> DecyclingResult:
    """phi, phi3, nu and the middle bound from one chordless-cycle census."""
    budget = ensure_budget(budget)
    all_masks, tern_masks = _cycle_masks(g, budget)

    phi, phi_mask = _min_transversal(all_masks, budget)
    if not g.delete_vertices(phi_mask).is_acyclic():
        raise AssertionError("decycling witness failed the acyclicity re-check")

    phi3, phi3_mask = _min_transversal(tern_masks, budget)
    if not is_ternary(g.delete_vertices(phi3_mask), budget=budget):
        raise AssertionError("ternary decycling witness failed the ternary re-check")

    if not tern_masks:
        mid, mid_witness = 1, ()
    else:
        candidates, _ = _minimal_transversal_masks(tern_masks, budget, cap=None)
        best = None
        best_mask = 0
        for m in candidates:
            budget.spend()
            count = _count_independent(g.adj, m)
            if best is None or count < best:
                best, best_mask = count, m
        mid = best
        mid_witness = tuple(g.labels[v] for v in iter_bits(best_mask))

    return DecyclingResult(
        phi=phi,
        phi_witness=tuple(g.labels[v] for v in iter_bits(phi_mask)),
        phi3=phi3,
        phi3_witness=tuple(g.labels[v] for v in iter_bits(phi3_mask)),
        nu=cyclomatic_number(g),
        middle_bound=mid,
        middle_witness=mid_witness,
    )
