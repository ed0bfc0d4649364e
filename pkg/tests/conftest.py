"""Shared helpers: definition-level brute-force oracles and graph generators.

The oracles here deliberately reimplement everything from the definitions
(itertools over vertex subsets, permutation checks for cycles) so the library
is always tested against an independent code path.
"""

from itertools import combinations, permutations
import random

from hypothesis import strategies as st

from altind import Graph


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


@st.composite
def graphs(draw, max_n: int = 9, min_n: int = 0):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    picks = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, picks) if keep])


# -- independence oracles ------------------------------------------------------


def brute_polynomial(g: Graph) -> list[int]:
    coeffs = [0] * (g.n + 1)
    for k in range(g.n + 1):
        for subset in combinations(range(g.n), k):
            if all(not g.has_edge(u, v) for u, v in combinations(subset, 2)):
                coeffs[k] += 1
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def brute_alternating(g: Graph) -> int:
    return sum(c if k % 2 == 0 else -c for k, c in enumerate(brute_polynomial(g)))


def brute_count(g: Graph) -> int:
    return sum(brute_polynomial(g))


# -- cycle oracles -------------------------------------------------------------


def _induces_cycle(g: Graph, subset: tuple[int, ...]) -> bool:
    """G[subset] connected and 2-regular, i.e. exactly a chordless cycle."""
    sub = g.induced_subgraph(subset)
    return all(sub.degree(v) == 2 for v in range(sub.n)) and sub.is_connected()


def brute_chordless_sets(g: Graph) -> set[frozenset[int]]:
    found = set()
    for k in range(3, g.n + 1):
        for subset in combinations(range(g.n), k):
            if _induces_cycle(g, subset):
                found.add(frozenset(subset))
    return found


def brute_is_ternary(g: Graph) -> bool:
    return all(len(s) % 3 != 0 for s in brute_chordless_sets(g))


def brute_simple_cycle_lengths(g: Graph) -> set[int]:
    """Lengths of all simple cycles, by permutation check over vertex subsets."""
    lengths = set()
    for k in range(3, g.n + 1):
        if k in lengths:
            continue
        for subset in combinations(range(g.n), k):
            if _has_hamiltonian_cycle(g, subset):
                lengths.add(k)
                break
    return lengths


def _has_hamiltonian_cycle(g: Graph, subset: tuple[int, ...]) -> bool:
    first, *rest = subset
    for perm in permutations(rest):
        order = (first,) + perm
        if all(g.has_edge(order[i], order[(i + 1) % len(order)]) for i in range(len(order))):
            return True
    return False


def brute_has_cycle_not_div3(g: Graph) -> bool:
    return any(length % 3 != 0 for length in brute_simple_cycle_lengths(g))


# -- decycling oracles -----------------------------------------------------------


def brute_is_acyclic(g: Graph) -> bool:
    """Independent acyclicity test: DFS looking for a back edge."""
    seen = set()
    for start in range(g.n):
        if start in seen:
            continue
        stack = [(start, -1)]
        seen.add(start)
        while stack:
            v, parent = stack.pop()
            skipped_parent = False
            for u in g.neighbors(v):
                if u == parent and not skipped_parent:
                    skipped_parent = True
                    continue
                if u in seen:
                    return False
                seen.add(u)
                stack.append((u, v))
    return True


def brute_min_decycling(g: Graph) -> tuple[int, tuple[int, ...]]:
    for k in range(g.n + 1):
        for subset in combinations(range(g.n), k):
            if brute_is_acyclic(g.delete_vertices(subset)):
                return k, subset
    raise AssertionError("unreachable: deleting everything is acyclic")


def brute_min_ternary_decycling(g: Graph) -> tuple[int, tuple[int, ...]]:
    for k in range(g.n + 1):
        for subset in combinations(range(g.n), k):
            if brute_is_ternary(g.delete_vertices(subset)):
                return k, subset
    raise AssertionError("unreachable: deleting everything is ternary")


def brute_ternary_decycling_sets(g: Graph) -> list[tuple[int, ...]]:
    out = []
    for k in range(g.n + 1):
        for subset in combinations(range(g.n), k):
            if brute_is_ternary(g.delete_vertices(subset)):
                out.append(subset)
    return out


def brute_minimal_ternary_decycling_sets(g: Graph) -> set[frozenset[int]]:
    all_sets = [frozenset(s) for s in brute_ternary_decycling_sets(g)]
    return {
        s for s in all_sets
        if not any(other < s for other in all_sets)
    }


def brute_middle_bound(g: Graph) -> int:
    return min(
        brute_count(g.induced_subgraph(subset))
        for subset in brute_ternary_decycling_sets(g)
    )
