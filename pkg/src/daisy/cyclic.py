"""Cyclic shift constructions of daisy-free hypergraphs.

The central object is the shift graph G(n, r, t, j) on Z_n: an r-subset A
is an edge when (j + sum(A)) mod n is at most d_t(A), the minimum span of
t circularly consecutive elements of A.  Also here: residue-class graphs,
the augmented blow-up that re-adds collapsed-projection edges, the
doubling construction for the 4-uniform 4-edge daisy, and a Monte Carlo
sampler of the continuous circle graph that the finite constructions
discretize.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from pathlib import Path

import numpy as np

from .hypergraph import UniformHypergraph, check_budget_edges
from .sampling import (
    chunk_layout,
    min_window_arcs,
    run_chunks,
    sorted_uniform_points,
    substream,
)
from .subsets import check_budget, combinations_colex, rank_chunks


@dataclass(frozen=True)
class CyclicSubset:
    """A subset of Z_n with its circular gap structure cached."""

    n: int
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        elems = tuple(sorted(self.elements))
        if len(set(elems)) != len(elems):
            raise ValueError(f"elements {self.elements} are not distinct")
        if elems and (elems[0] < 0 or elems[-1] >= self.n):
            raise ValueError(f"elements {elems} outside Z_{self.n}")
        object.__setattr__(self, "elements", elems)

    @cached_property
    def gaps(self) -> tuple[int, ...]:
        """Circular gaps to the next element; they are positive and sum to n."""
        e, n = self.elements, self.n
        s = len(e)
        if s == 1:
            return (n,)
        return tuple((e[(i + 1) % s] - e[i]) % n for i in range(s))

    @property
    def sum_mod_n(self) -> int:
        return sum(self.elements) % self.n

    def __len__(self) -> int:
        return len(self.elements)


def diameter(a: CyclicSubset) -> int:
    """Length of the shortest directed path of the n-cycle through all of a."""
    if len(a) < 1:
        raise ValueError("diameter needs at least one element")
    return a.n - max(a.gaps)


def windowed_diameter(a: CyclicSubset, t: int) -> int:
    """d_t(a): the minimum diameter over t-element subsets of a.

    Computed as the minimum span of t circularly consecutive elements,
    which equals the subset minimum (cross-checked against
    :func:`windowed_diameter_bruteforce` in the test suite).
    """
    s = len(a)
    if not 2 <= t <= s:
        raise ValueError(f"need 2 <= t <= |A|, got t={t}, |A|={s}")
    e, n = a.elements, a.n
    return min((e[(i + t - 1) % s] - e[i]) % n for i in range(s))


def windowed_diameter_bruteforce(a: CyclicSubset, t: int) -> int:
    """Reference d_t by scanning all C(|A|, t) subsets."""
    if not 2 <= t <= len(a):
        raise ValueError(f"need 2 <= t <= |A|, got t={t}, |A|={len(a)}")
    return min(
        diameter(CyclicSubset(a.n, b)) for b in itertools.combinations(a.elements, t)
    )


@dataclass(frozen=True)
class ShiftGraphSpec:
    """Parameters of a shift graph G(n, r, t, j)."""

    n: int
    r: int
    t: int
    j: int

    def __post_init__(self) -> None:
        if not 3 <= self.r < self.n:
            raise ValueError(f"need 3 <= r < n, got r={self.r}, n={self.n}")
        if not 2 <= self.t <= self.r:
            raise ValueError(f"need 2 <= t <= r, got t={self.t}, r={self.r}")
        if not 0 <= self.j < self.n:
            raise ValueError(f"need 0 <= j < n, got j={self.j}, n={self.n}")


def window_index_pairs(r: int, t: int) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Index pairs (i, i+t-1 mod r) split into non-wrapping and wrapping,
    so hot loops can compute d_t without modular arithmetic."""
    flat = [(i, i + t - 1) for i in range(r - t + 1)]
    wrap = [(i, i + t - 1 - r) for i in range(r - t + 1, r)]
    return flat, wrap


def build_shift_graph(spec: ShiftGraphSpec, budget: int | None = None) -> UniformHypergraph:
    """Enumerate Z_n exhaustively and keep the subsets passing the edge rule."""
    n, r, t, j = spec.n, spec.r, spec.t, spec.j
    check_budget(n, r, budget)
    flat, wrap = window_index_pairs(r, t)
    edges = []
    for a in itertools.combinations(range(n), r):
        d = min(a[jj] - a[ii] for ii, jj in flat)
        if wrap:
            d = min(d, min(a[jj] + n - a[ii] for ii, jj in wrap))
        if (j + sum(a)) % n <= d:
            edges.append(a)
    return UniformHypergraph(r=r, n=n, edges=tuple(edges))


@dataclass(frozen=True)
class ShiftProfile:
    """Edge counts of G(n, r, t, j) for every shift j, from one scan."""

    n: int
    r: int
    t: int
    counts: tuple[int, ...]

    @property
    def average(self) -> Fraction:
        return Fraction(sum(self.counts), self.n)

    @property
    def best_j(self) -> int:
        best = max(self.counts)
        return self.counts.index(best)

    @property
    def best_count(self) -> int:
        return max(self.counts)

    def to_json_dict(self) -> dict:
        avg = self.average
        return {
            "n": self.n,
            "r": self.r,
            "t": self.t,
            "counts": list(self.counts),
            "average": f"{avg.numerator}/{avg.denominator}",
            "best_j": self.best_j,
            "best_count": self.best_count,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def _profile_chunk(args: tuple[int, int, int, int, int]) -> list[list[int]]:
    """Histogram (sum mod n, d_t) over one colex rank range of r-subsets."""
    n, r, t, lo, hi = args
    flat, wrap = window_index_pairs(r, t)
    hist = [[0] * n for _ in range(n)]
    for a in combinations_colex(n, r, lo, hi):
        d = min(a[jj] - a[ii] for ii, jj in flat)
        if wrap:
            d = min(d, min(a[jj] + n - a[ii] for ii, jj in wrap))
        hist[sum(a) % n][d] += 1
    return hist


def shift_edge_profile(
    n: int, r: int, t: int, workers: int = 1, budget: int | None = None
) -> ShiftProfile:
    """Per-j edge counts from a single pass over all C(n, r) subsets.

    The scan is split over colex rank ranges; per-range histograms merge
    by cellwise addition, so the result is identical for any worker count.
    """
    ShiftGraphSpec(n=n, r=r, t=t, j=0)
    total = check_budget(n, r, budget)
    chunks = [(n, r, t, lo, hi) for lo, hi in rank_chunks(total, max(1, workers * 4))]
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_profile_chunk, chunks))
    else:
        parts = [_profile_chunk(c) for c in chunks]
    hist = [[0] * n for _ in range(n)]
    for part in parts:
        for s in range(n):
            row = hist[s]
            for d, c in enumerate(part[s]):
                row[d] += c
    # suffix[s][v] = number of subsets with sum s and d_t >= v
    suffix = []
    for s in range(n):
        acc = 0
        suf = [0] * (n + 1)
        for d in range(n - 1, -1, -1):
            acc += hist[s][d]
            suf[d] = acc
        suffix.append(suf)
    counts = tuple(
        sum(suffix[s][(j + s) % n] for s in range(n)) for j in range(n)
    )
    return ShiftProfile(n=n, r=r, t=t, counts=counts)


def shift_edge_profile_cached(
    n: int,
    r: int,
    t: int,
    cache_dir: str | Path | None,
    workers: int = 1,
    budget: int | None = None,
) -> ShiftProfile:
    """Profile with a content-addressed disk cache for the big scans."""
    if cache_dir is None:
        return shift_edge_profile(n, r, t, workers, budget)
    key = json.dumps({"kind": "shift_profile", "n": n, "r": r, "t": t}, sort_keys=True)
    digest = hashlib.sha256(key.encode()).hexdigest()[:16]
    path = Path(cache_dir) / f"profile-{digest}.json"
    if path.exists():
        data = json.loads(path.read_text(encoding="utf-8"))
        if (data["n"], data["r"], data["t"]) == (n, r, t):
            return ShiftProfile(n=n, r=r, t=t, counts=tuple(data["counts"]))
    profile = shift_edge_profile(n, r, t, workers, budget)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(profile.to_json(), encoding="utf-8")
    return profile


def residue_class_graph(
    n: int, r: int, classes, budget: int | None = None
) -> UniformHypergraph:
    """All r-subsets of Z_n whose element sum mod n lies in `classes`."""
    wanted = {c % n for c in classes}
    check_budget(n, r, budget)
    edges = tuple(
        a for a in itertools.combinations(range(n), r) if sum(a) % n in wanted
    )
    return UniformHypergraph(r=r, n=n, edges=edges)


def residue_class_sizes(n: int, r: int, budget: int | None = None) -> list[int]:
    """Sizes of the n residue classes of r-subset sums."""
    check_budget(n, r, budget)
    sizes = [0] * n
    for a in itertools.combinations(range(n), r):
        sizes[sum(a) % n] += 1
    return sizes


def augmented_blowup(
    base: UniformHypergraph, t: int, j: int, budget: int | None = None
) -> UniformHypergraph:
    """Blow up `base` by factor t and re-add the collapsed-sum edges.

    On vertex set Z_n x [t] (vertex (x, y) encoded x*t + y), an r-subset A
    with projection p(A) is an edge when either p(A) has r distinct values
    forming an edge of `base`, or p(A) has at most r-2 distinct values and
    the multiset sum of projections is j mod n.  Projections of size r-1
    are never edges.
    """
    if t < 2:
        raise ValueError(f"need t >= 2, got {t}")
    n, r = base.n, base.r
    if not 0 <= j < n:
        raise ValueError(f"need 0 <= j < n, got j={j}")
    check_budget(n * t, r, budget)
    edge_set = base.edge_set
    edges = []
    for a in itertools.combinations(range(n * t), r):
        proj = [v // t for v in a]
        distinct = len(set(proj))
        if distinct == r:
            if tuple(proj) in edge_set:
                edges.append(a)
        elif distinct <= r - 2 and sum(proj) % n == j:
            edges.append(a)
    return UniformHypergraph(r=r, n=n * t, edges=tuple(edges))


def h44_recursive_graph(s: int) -> UniformHypergraph:
    """Doubling construction for 4-graphs with no 5 vertices on 4 edges.

    Level 1 is a single edge on 4 vertices; each level takes two disjoint
    copies of the previous one and adds every 4-subset with exactly two
    vertices in each copy.  Edge counts follow
    e_{s+1} = 2 e_s + C(v_s, 2)^2 with v_{s+1} = 2 v_s.
    """
    if not 1 <= s <= 4:
        raise ValueError(f"need 1 <= s <= 4, got {s}")
    verts = 4
    edges = {(0, 1, 2, 3)}
    for _ in range(s - 1):
        shifted = {tuple(v + verts for v in e) for e in edges}
        merged = edges | shifted
        for left in itertools.combinations(range(verts), 2):
            for right in itertools.combinations(range(verts, 2 * verts), 2):
                merged.add(left + right)
        verts *= 2
        edges = merged
    return UniformHypergraph(r=4, n=verts, edges=tuple(edges))


# --- continuous circle graph -----------------------------------------------
#
# Positions are fractions of circumference in [0, 1).  The product of the
# corresponding unit-circle points has argument (sum of positions) mod 1 in
# the same units, so the edge rule is phi <= Delta_t with both sides in
# circumference fractions, and the edge probability of an i.i.d. uniform
# r-sample is exactly the expected shortest-arc length e_{r,t}.


@dataclass(frozen=True)
class CirclePointSample:
    """r sampled circle positions (sorted, in [0,1)) plus seed lineage."""

    positions: tuple[float, ...]
    lineage: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "positions", tuple(sorted(self.positions)))


def circle_edge_decision(positions, t: int) -> tuple[bool, float, float]:
    """(is_edge, delta_t, phi) for a finite circle point set.

    delta_t is the shortest arc containing at least t points; phi is the
    argument of the product of the points, both in circumference fractions.
    """
    pts = sorted(positions)
    r = len(pts)
    if not 2 <= t <= r:
        raise ValueError(f"need 2 <= t <= r, got t={t}, r={r}")
    delta = min((pts[(i + t - 1) % r] - pts[i]) % 1.0 for i in range(r))
    phi = math.fsum(pts) % 1.0
    return phi <= delta, delta, phi


def sample_continuous_edge(
    r: int, t: int, rng: np.random.Generator, lineage: str = ""
) -> tuple[CirclePointSample, bool]:
    """Draw r uniform circle points and apply the edge rule.

    Coincident points (measure zero) are rejected and redrawn so that the
    shortest arc is well-defined.
    """
    if not 2 <= t <= r:
        raise ValueError(f"need 2 <= t <= r, got t={t}, r={r}")
    while True:
        pts = np.sort(rng.random(r))
        if np.all(np.diff(pts) > 0.0):
            break
    sample = CirclePointSample(positions=tuple(float(p) for p in pts), lineage=lineage)
    is_edge, _, _ = circle_edge_decision(sample.positions, t)
    return sample, is_edge


@dataclass(frozen=True)
class EdgeFrequency:
    """Monte Carlo estimate of the continuous edge probability e_{r,t}."""

    r: int
    t: int
    samples: int
    frequency: float
    stderr: float
    seed: int


def continuous_edge_frequency(
    r: int, t: int, samples: int, seed: int, workers: int = 1
) -> EdgeFrequency:
    """Vectorized edge-rate estimate over deterministic substreams."""
    if not 2 <= t <= r:
        raise ValueError(f"need 2 <= t <= r, got t={t}, r={r}")
    if samples < 1:
        raise ValueError("need at least one sample")

    def one_chunk(index: int, count: int) -> int:
        rng = substream(seed, index)
        raw = rng.random((count, r))
        phi = np.sum(raw, axis=1) % 1.0
        pts = np.sort(raw, axis=1)
        delta = min_window_arcs(pts, t)
        return int(np.count_nonzero(phi <= delta))

    hits = sum(run_chunks(one_chunk, chunk_layout(samples), workers))
    freq = hits / samples
    stderr = math.sqrt(max(freq * (1.0 - freq), 1e-300) / samples)
    return EdgeFrequency(r=r, t=t, samples=samples, frequency=freq, stderr=stderr, seed=seed)


def continuous_circle_graph(positions, r: int, t: int) -> UniformHypergraph:
    """Finite subgraph of the continuous graph induced on `positions`.

    Vertex i is the i-th smallest position; every r-subset passing the
    edge rule becomes an edge.
    """
    pts = sorted(float(p) for p in positions)
    if len(set(pts)) != len(pts):
        raise ValueError("positions must be distinct")
    m = len(pts)
    check_budget(m, r)
    edges = []
    for idx in itertools.combinations(range(m), r):
        is_edge, _, _ = circle_edge_decision([pts[i] for i in idx], t)
        if is_edge:
            edges.append(idx)
    return UniformHypergraph(r=r, n=m, edges=tuple(edges))
