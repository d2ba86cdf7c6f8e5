"""Exact graph coloring by branch and bound.

The pair-covering bound needs the exact chromatic number of a line graph,
so approximation is not an option here.  Exactness is guaranteed (and
enforced) only up to MAX_EXACT_VERTICES vertices; larger inputs are
rejected rather than approximated.
"""

from __future__ import annotations

from .hypergraph import SimpleGraph

MAX_EXACT_VERTICES = 24


class ColoringSizeError(ValueError):
    """Input exceeds the size for which exactness is guaranteed."""


def chromatic_number(g: SimpleGraph) -> int:
    """Exact chromatic number of `g` (at most MAX_EXACT_VERTICES vertices).

    Lower bound from a greedy clique, upper bound from greedy DSATUR; the
    gap is closed by backtracking k-colorability tests with the clique
    pre-colored for symmetry breaking.
    """
    n = g.n
    if n > MAX_EXACT_VERTICES:
        raise ColoringSizeError(
            f"{n} vertices exceeds the exactness limit {MAX_EXACT_VERTICES}"
        )
    if n == 0:
        return 0
    if not g.adjacency:
        return 1
    masks = g.neighbor_masks()
    clique = _greedy_clique(masks)
    ub, greedy_colors = _dsatur_upper_bound(masks)
    lb = len(clique)
    if lb == ub:
        return ub
    for k in range(lb, ub):
        if _is_k_colorable(masks, k, clique):
            return k
    return ub


def _greedy_clique(masks: list[int]) -> list[int]:
    order = sorted(range(len(masks)), key=lambda v: -bin(masks[v]).count("1"))
    clique: list[int] = []
    for v in order:
        if all(masks[v] >> u & 1 for u in clique):
            clique.append(v)
    return clique


def _dsatur_upper_bound(masks: list[int]) -> tuple[int, list[int]]:
    n = len(masks)
    colors = [-1] * n
    neighbor_colors: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (len(neighbor_colors[u]), bin(masks[u]).count("1"), -u),
        )
        c = 0
        while c in neighbor_colors[v]:
            c += 1
        colors[v] = c
        for u in range(n):
            if masks[v] >> u & 1:
                neighbor_colors[u].add(c)
    return max(colors) + 1, colors


def _is_k_colorable(masks: list[int], k: int, clique: list[int]) -> bool:
    n = len(masks)
    if len(clique) > k:
        return False
    colors = [-1] * n
    for c, v in enumerate(clique):
        colors[v] = c

    def feasible(v: int, c: int) -> bool:
        m = masks[v]
        return all(colors[u] != c for u in range(n) if m >> u & 1)

    def assign() -> bool:
        # DSATUR-style branching: pick the uncolored vertex with the most
        # distinctly colored neighbors, break ties by degree.
        best_v, best_sat = -1, (-1, -1)
        for v in range(n):
            if colors[v] >= 0:
                continue
            seen = {colors[u] for u in range(n) if masks[v] >> u & 1 and colors[u] >= 0}
            sat = (len(seen), bin(masks[v]).count("1"))
            if sat > best_sat:
                best_v, best_sat = v, sat
        if best_v < 0:
            return True
        used = max(colors) + 1
        for c in range(min(k, used + 1)):
            if feasible(best_v, c):
                colors[best_v] = c
                if assign():
                    return True
                colors[best_v] = -1
        return False

    return assign()
