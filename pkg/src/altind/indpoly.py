"""Exact independence-polynomial computation.

A polynomial is a plain list of arbitrary-precision ints, ``coeffs[k]`` being
the number of independent sets of size ``k``; the degree is the independence
number.  The engine recurses with the vertex identity

    I(G; x) = I(G - v; x) + x * I(G - N[v]; x)

pivoting on a maximum-degree vertex that lies on a cycle of the current
component, multiplies across connected components, short-circuits forest
components with a tree DP, and memoizes per component bitmask of the
top-level graph.  Evaluation at a fixed integer point (the alternating number
at -1, the total count at +1) runs the same recursion over plain ints so no
polynomial is ever materialized.

:func:`oracle_polynomial` is the definition-level reference: it enumerates
all ``2^n`` vertex subsets and is deliberately unoptimized.
"""

from __future__ import annotations

from .budget import Budget, ensure_budget
from .graph import Graph, components_of, iter_bits, subgraph_edge_count

ORACLE_CAP = 25


# -- topology helpers shared by both engines ----------------------------------


def _two_core(adj: tuple[int, ...], mask: int) -> int:
    """Iteratively strip degree <= 1 vertices within ``mask``."""
    core = mask
    while True:
        drop = 0
        for v in iter_bits(core):
            if (adj[v] & core).bit_count() <= 1:
                drop |= 1 << v
        if not drop:
            return core
        core &= ~drop


def _on_cycle(adj: tuple[int, ...], core: int, v: int) -> bool:
    """True when two neighbors of v are connected inside core - v."""
    rest = core & ~(1 << v)
    nb = adj[v] & core
    while nb:
        seed = nb & -nb
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for u in iter_bits(frontier):
                grow |= adj[u]
            grow &= rest & ~comp
            comp |= grow
            frontier = grow
        if (comp & adj[v]).bit_count() >= 2:
            return True
        nb &= ~comp
    return False


def _pivot(adj: tuple[int, ...], cmask: int) -> int:
    """Pivot choice: max degree in the component among cycle vertices,
    ties broken by lowest index.  The caller guarantees a cycle exists."""
    core = _two_core(adj, cmask)
    candidates = sorted(iter_bits(core), key=lambda v: (-(adj[v] & cmask).bit_count(), v))
    for v in candidates:
        if _on_cycle(adj, core, v):
            return v
    raise AssertionError("component was expected to contain a cycle")


def _tree_order(adj: tuple[int, ...], cmask: int) -> tuple[list[int], dict[int, int]]:
    root = (cmask & -cmask).bit_length() - 1
    parent = {root: -1}
    order = [root]
    stack = [root]
    while stack:
        v = stack.pop()
        for u in iter_bits(adj[v] & cmask):
            if u != parent[v]:
                parent[u] = v
                order.append(u)
                stack.append(u)
    return order, parent


def _tree_eval(adj: tuple[int, ...], cmask: int, x: int) -> int:
    """I(T; x) for a tree component, by the rooted include/exclude DP."""
    order, parent = _tree_order(adj, cmask)
    excl: dict[int, int] = {}
    incl: dict[int, int] = {}
    for v in reversed(order):
        e_val = 1
        i_val = x
        for u in iter_bits(adj[v] & cmask):
            if parent[u] == v:
                e_val *= excl[u] + incl[u]
                i_val *= excl[u]
        excl[v] = e_val
        incl[v] = i_val
    root = order[0]
    return excl[root] + incl[root]


# -- polynomial arithmetic -----------------------------------------------------


def _poly_add(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = a[:]
    for i, c in enumerate(b):
        out[i] += c
    return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _tree_poly(adj: tuple[int, ...], cmask: int) -> list[int]:
    order, parent = _tree_order(adj, cmask)
    excl: dict[int, list[int]] = {}
    incl: dict[int, list[int]] = {}
    for v in reversed(order):
        e_val = [1]
        i_val = [1]
        for u in iter_bits(adj[v] & cmask):
            if parent[u] == v:
                e_val = _poly_mul(e_val, _poly_add(excl[u], incl[u]))
                i_val = _poly_mul(i_val, excl[u])
        excl[v] = e_val
        incl[v] = [0] + i_val
    root = order[0]
    return _poly_add(excl[root], incl[root])


# -- engines -------------------------------------------------------------------


class _IntEngine:
    """Evaluates I(G; x) at a fixed integer x over surviving-vertex bitmasks."""

    __slots__ = ("adj", "x", "budget", "memo")

    def __init__(self, adj: tuple[int, ...], x: int, budget: Budget):
        self.adj = adj
        self.x = x
        self.budget = budget
        self.memo: dict[int, int] = {}

    def eval_mask(self, mask: int) -> int:
        if mask == 0:
            return 1
        result = 1
        for comp in components_of(self.adj, mask):
            result *= self.eval_component(comp)
        return result

    def eval_component(self, cmask: int) -> int:
        cached = self.memo.get(cmask)
        if cached is not None:
            return cached
        self.budget.spend()
        size = cmask.bit_count()
        if size == 1:
            val = 1 + self.x
        elif subgraph_edge_count(self.adj, cmask) == size - 1:
            val = _tree_eval(self.adj, cmask, self.x)
        else:
            v = _pivot(self.adj, cmask)
            closed = (self.adj[v] | 1 << v) & cmask
            val = self.eval_mask(cmask ^ (1 << v)) + self.x * self.eval_mask(cmask & ~closed)
        self.memo[cmask] = val
        return val


class _PolyEngine:
    """Full coefficient-vector variant of :class:`_IntEngine`."""

    __slots__ = ("adj", "budget", "memo")

    def __init__(self, adj: tuple[int, ...], budget: Budget):
        self.adj = adj
        self.budget = budget
        self.memo: dict[int, list[int]] = {}

    def eval_mask(self, mask: int) -> list[int]:
        if mask == 0:
            return [1]
        result = [1]
        for comp in components_of(self.adj, mask):
            result = _poly_mul(result, self.eval_component(comp))
        return result

    def eval_component(self, cmask: int) -> list[int]:
        cached = self.memo.get(cmask)
        if cached is not None:
            return cached
        self.budget.spend()
        size = cmask.bit_count()
        if size == 1:
            val = [1, 1]
        elif subgraph_edge_count(self.adj, cmask) == size - 1:
            val = _tree_poly(self.adj, cmask)
        else:
            v = _pivot(self.adj, cmask)
            closed = (self.adj[v] | 1 << v) & cmask
            val = _poly_add(
                self.eval_mask(cmask ^ (1 << v)),
                [0] + self.eval_mask(cmask & ~closed),
            )
        self.memo[cmask] = val
        return val


# -- public operations -----------------------------------------------------------


def independence_polynomial(g: Graph, budget: "Budget | None" = None) -> list[int]:
    """Exact coefficients of I(G; x); ``coeffs[k]`` counts independent k-sets."""
    engine = _PolyEngine(g.adj, ensure_budget(budget))
    return engine.eval_mask(g.all_mask)


def alternating_number(g: Graph, budget: "Budget | None" = None) -> int:
    """I(G; -1): even-size independent sets minus odd-size ones."""
    engine = _IntEngine(g.adj, -1, ensure_budget(budget))
    return engine.eval_mask(g.all_mask)


def independent_set_count(g: Graph, budget: "Budget | None" = None) -> int:
    """I(G; 1): the total number of independent sets, the empty set included."""
    engine = _IntEngine(g.adj, 1, ensure_budget(budget))
    return engine.eval_mask(g.all_mask)


def oracle_polynomial(g: Graph, cap: int = ORACLE_CAP) -> list[int]:
    """Reference coefficients by brute subset enumeration; refuses n > cap."""
    if g.n > cap:
        raise ValueError(f"oracle enumeration is limited to n <= {cap} (got n={g.n})")
    n = g.n
    adj = g.adj
    coeffs = [0] * (n + 1)
    coeffs[0] = 1
    indep = bytearray(1 << n)
    indep[0] = 1
    for mask in range(1, 1 << n):
        low = mask & -mask
        rest = mask ^ low
        if indep[rest] and not adj[low.bit_length() - 1] & rest:
            indep[mask] = 1
            coeffs[mask.bit_count()] += 1
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs
