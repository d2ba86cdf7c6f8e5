"""Uniform hypergraphs and the exhaustive verification oracles.

A daisy H_k^r is the r-uniform hypergraph with r+1 vertices and k edges
(unique up to isomorphism, 2 <= k <= r+1).  A graph is H_k^r-free exactly
when every set of r+1 vertices induces at most k-1 edges, which is what
:func:`is_daisy_free` checks by brute force.  Everything downstream of the
constructions in this package is certified against these oracles.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

from .subsets import check_budget, rank_chunks, combinations_lex


@dataclass(frozen=True)
class UniformHypergraph:
    """An r-uniform hypergraph on the dense vertex set {0..n-1}.

    Edges are ascending r-tuples kept in lexicographic order, so equal
    graphs have identical serializations.  Instances are immutable; all
    operations on them are pure functions.
    """

    r: int
    n: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError(f"edge size r must be >= 1, got {self.r}")
        if self.n < self.r:
            raise ValueError(f"need n >= r, got n={self.n}, r={self.r}")
        canon = sorted({tuple(sorted(e)) for e in self.edges})
        for e in canon:
            if len(e) != self.r:
                raise ValueError(f"edge {e} does not have {self.r} distinct vertices")
            if e[0] < 0 or e[-1] >= self.n:
                raise ValueError(f"edge {e} has a vertex outside [0, {self.n})")
        object.__setattr__(self, "edges", tuple(canon))

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.edges)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return deg


@dataclass(frozen=True)
class SimpleGraph:
    """An undirected simple graph: symmetric, irreflexive pair set."""

    n: int
    adjacency: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        pairs = set()
        for a, b in self.adjacency:
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise ValueError(f"edge ({a},{b}) outside [0, {self.n})")
            pairs.add((min(a, b), max(a, b)))
        object.__setattr__(self, "adjacency", frozenset(pairs))

    def neighbor_masks(self) -> list[int]:
        """Adjacency as per-vertex bitmasks (used by the exact colorer)."""
        masks = [0] * self.n
        for a, b in self.adjacency:
            masks[a] |= 1 << b
            masks[b] |= 1 << a
        return masks

    def is_complete(self) -> bool:
        return len(self.adjacency) == self.n * (self.n - 1) // 2


@dataclass(frozen=True)
class DaisyWitness:
    """An (r+1)-vertex set inducing at least k edges, refuting freeness."""

    vertex_set: tuple[int, ...]
    contained_edges: tuple[tuple[int, ...], ...]


def daisy_hypergraph(r: int, k: int) -> UniformHypergraph:
    """The daisy H_k^r itself: r+1 vertices, the k edges omitting one of
    the last k vertices each."""
    if not 2 <= k <= r + 1:
        raise ValueError(f"need 2 <= k <= r+1, got k={k}, r={r}")
    verts = range(r + 1)
    edges = [tuple(v for v in verts if v != omit) for omit in range(r + 1 - k, r + 1)]
    return UniformHypergraph(r=r, n=r + 1, edges=tuple(edges))


def complete_hypergraph(n: int, r: int) -> UniformHypergraph:
    return UniformHypergraph(r=r, n=n, edges=tuple(itertools.combinations(range(n), r)))


def induced_edge_count(graph: UniformHypergraph, vertices) -> int:
    """Number of edges of `graph` contained in the vertex set `vertices`."""
    vset = frozenset(vertices)
    for v in vset:
        if not 0 <= v < graph.n:
            raise ValueError(f"vertex {v} outside [0, {graph.n})")
    return sum(1 for e in graph.edges if vset.issuperset(e))


def is_daisy_free(
    graph: UniformHypergraph, k: int, chunks: int = 1
) -> tuple[bool, DaisyWitness | None]:
    """Decide whether `graph` is H_k^r-free.

    Scans all (r+1)-subsets B in lexicographic order and short-circuits on
    the first B inducing >= k edges, returning it as a witness.  When
    `chunks` > 1 the lex rank range is partitioned and scanned chunk by
    chunk; the reported witness is always the lexicographically first one,
    so the result does not depend on the partition.
    """
    r = graph.r
    if not 2 <= k <= r + 1:
        raise ValueError(f"need 2 <= k <= r+1, got k={k}, r={r}")
    n = graph.n
    if n < r + 1:
        return True, None
    total = check_budget(n, r + 1)
    edge_set = graph.edge_set
    for lo, hi in rank_chunks(total, chunks):
        witness = _scan_for_witness(edge_set, n, r, k, lo, hi)
        if witness is not None:
            return False, witness
    return True, None


def _scan_for_witness(edge_set, n, r, k, lo, hi):
    for b in combinations_lex(n, r + 1, lo, hi):
        contained = []
        for i in range(r + 1):
            cand = b[:i] + b[i + 1 :]
            if cand in edge_set:
                contained.append(cand)
        if len(contained) >= k:
            return DaisyWitness(vertex_set=b, contained_edges=tuple(contained))
    return None


def is_pair_covering(graph: UniformHypergraph) -> bool:
    """True when every pair of vertices lies in at least one edge."""
    covered = set()
    for e in graph.edges:
        covered.update(itertools.combinations(e, 2))
    return len(covered) == math.comb(graph.n, 2)


def line_graph(graph: UniformHypergraph) -> SimpleGraph:
    """Graph on the edges of `graph`, adjacent when they share r-1 vertices.

    Vertex i of the result is the i-th edge in canonical order.
    """
    m = graph.num_edges
    sets = [frozenset(e) for e in graph.edges]
    adj = frozenset(
        (i, j)
        for i in range(m)
        for j in range(i + 1, m)
        if len(sets[i] & sets[j]) == graph.r - 1
    )
    return SimpleGraph(n=m, adjacency=adj)


def blow_up(graph: UniformHypergraph, m: int, budget: int | None = None) -> UniformHypergraph:
    """Replace each vertex x by m clones x*m+y, y in [0, m); every edge
    lifts to the m^r ways of picking one clone per vertex."""
    if m < 1:
        raise ValueError(f"blow-up factor must be >= 1, got {m}")
    total = graph.num_edges * m**graph.r
    check_budget_edges(total, budget)
    new_edges = []
    for e in graph.edges:
        for ys in itertools.product(range(m), repeat=graph.r):
            new_edges.append(tuple(x * m + y for x, y in zip(e, ys)))
    return UniformHypergraph(r=graph.r, n=graph.n * m, edges=tuple(new_edges))


def check_budget_edges(total: int, budget: int | None = None) -> int:
    """Guard against materializing absurd edge counts; never truncates."""
    from .subsets import enumeration_budget, EnumerationBudgetError

    limit = enumeration_budget() if budget is None else budget
    if total > limit:
        raise EnumerationBudgetError(
            f"result would have {total} edges, over the budget {limit}"
        )
    return total


def link_graph(graph: UniformHypergraph, v: int) -> UniformHypergraph:
    """The (r-1)-graph of edges through v, with v removed and the remaining
    vertices relabeled 0..n-2 preserving order."""
    if graph.r < 2:
        raise ValueError("link graph needs r >= 2")
    if not 0 <= v < graph.n:
        raise ValueError(f"vertex {v} outside [0, {graph.n})")
    edges = []
    for e in graph.edges:
        if v in e:
            edges.append(tuple(w if w < v else w - 1 for w in e if w != v))
    return UniformHypergraph(r=graph.r - 1, n=graph.n - 1, edges=tuple(edges))


# Edge-list text format: header "r n m", then m lines of r ascending
# space-separated vertices, lines in lexicographic order, UTF-8, LF.

def to_edge_list_text(graph: UniformHypergraph) -> str:
    lines = [f"{graph.r} {graph.n} {graph.num_edges}"]
    lines.extend(" ".join(str(v) for v in e) for e in graph.edges)
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str) -> UniformHypergraph:
    lines = text.splitlines()
    if not lines:
        raise ValueError("empty edge-list text")
    head = lines[0].split()
    if len(head) != 3:
        raise ValueError(f"bad header {lines[0]!r}, expected 'r n m'")
    r, n, m = (int(x) for x in head)
    body = [ln for ln in lines[1:] if ln.strip()]
    if len(body) != m:
        raise ValueError(f"header claims {m} edges, found {len(body)} lines")
    edges = tuple(tuple(int(v) for v in ln.split()) for ln in body)
    for e in edges:
        if len(e) != r:
            raise ValueError(f"edge line {e} does not have {r} vertices")
    return UniformHypergraph(r=r, n=n, edges=edges)


def write_edge_list(graph: UniformHypergraph, path: str | Path) -> None:
    Path(path).write_text(to_edge_list_text(graph), encoding="utf-8", newline="\n")


def read_edge_list(path: str | Path) -> UniformHypergraph:
    return from_edge_list_text(Path(path).read_text(encoding="utf-8"))
