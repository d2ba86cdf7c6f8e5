import itertools
import random

import pytest

from daisy.coloring import ColoringSizeError, chromatic_number
from daisy.hypergraph import SimpleGraph


def complete(n):
    return SimpleGraph(n=n, adjacency=frozenset(itertools.combinations(range(n), 2)))


def cycle(n):
    return SimpleGraph(n=n, adjacency=frozenset((i, (i + 1) % n) for i in range(n)))


def test_known_values():
    for k in (1, 2, 3, 5, 8, 24):
        assert chromatic_number(complete(k)) == k
    assert chromatic_number(cycle(5)) == 3
    assert chromatic_number(cycle(6)) == 2
    assert chromatic_number(SimpleGraph(n=7, adjacency=frozenset())) == 1
    assert chromatic_number(SimpleGraph(n=0, adjacency=frozenset())) == 0


def test_petersen():
    edges = (
        [(i, (i + 1) % 5) for i in range(5)]
        + [(i, i + 5) for i in range(5)]
        + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    )
    assert chromatic_number(SimpleGraph(n=10, adjacency=frozenset(edges))) == 3


def test_size_limit():
    with pytest.raises(ColoringSizeError):
        chromatic_number(complete(25))


def _chi_bruteforce(g: SimpleGraph) -> int:
    for k in range(1, g.n + 1):
        for assignment in itertools.product(range(k), repeat=g.n):
            if all(assignment[a] != assignment[b] for a, b in g.adjacency):
                return k
    return 0


def test_against_bruteforce_on_random_graphs():
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(2, 7)
        adj = frozenset(
            p for p in itertools.combinations(range(n), 2) if rng.random() < 0.5
        )
        g = SimpleGraph(n=n, adjacency=adj)
        assert chromatic_number(g) == _chi_bruteforce(g)
