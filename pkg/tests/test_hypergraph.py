import itertools
import math

import pytest

from daisy import hypergraph as hg
from daisy.cyclic import ShiftGraphSpec, build_shift_graph


@pytest.fixture
def g5320():
    return build_shift_graph(ShiftGraphSpec(n=5, r=3, t=2, j=0))


def five_cycle():
    return hg.UniformHypergraph(r=2, n=5, edges=((0, 1), (1, 2), (2, 3), (3, 4), (0, 4)))


def test_canonicalization_and_validation():
    g = hg.UniformHypergraph(r=2, n=4, edges=((3, 1), (0, 2), (1, 3)))
    assert g.edges == ((0, 2), (1, 3))  # sorted, deduplicated
    with pytest.raises(ValueError):
        hg.UniformHypergraph(r=2, n=3, edges=((0, 3),))
    with pytest.raises(ValueError):
        hg.UniformHypergraph(r=3, n=4, edges=((0, 1),))
    with pytest.raises(ValueError):
        hg.UniformHypergraph(r=2, n=1, edges=())


def test_induced_edge_count_examples(g5320):
    single = hg.UniformHypergraph(r=3, n=4, edges=((0, 1, 2),))
    assert hg.induced_edge_count(single, {0, 1, 2, 3}) == 1
    assert hg.induced_edge_count(hg.complete_hypergraph(4, 3), {0, 1, 2, 3}) == 4
    assert hg.induced_edge_count(g5320, {0, 1, 2, 4}) == 2
    with pytest.raises(ValueError):
        hg.induced_edge_count(single, {0, 9})


def test_daisy_free_examples(g5320):
    assert hg.is_daisy_free(five_cycle(), 3) == (True, None)
    for r in (2, 3, 4):
        free, witness = hg.is_daisy_free(hg.complete_hypergraph(r + 1, r), r + 1)
        assert not free
        assert witness.vertex_set == tuple(range(r + 1))
        assert len(witness.contained_edges) == r + 1
    assert hg.is_daisy_free(g5320, 3)[0]
    with pytest.raises(ValueError):
        hg.is_daisy_free(g5320, 1)
    with pytest.raises(ValueError):
        hg.is_daisy_free(g5320, 5)


def test_witness_soundness_on_dense_random_graphs():
    # every False answer must come with a vertex set inducing >= k edges
    import random

    rng = random.Random(7)
    for trial in range(30):
        n, r = rng.choice([(6, 3), (7, 3), (7, 4), (8, 4)])
        all_edges = list(itertools.combinations(range(n), r))
        edges = tuple(e for e in all_edges if rng.random() < 0.55)
        if not edges:
            continue
        g = hg.UniformHypergraph(r=r, n=n, edges=edges)
        for k in range(2, r + 2):
            free, witness = hg.is_daisy_free(g, k)
            if free:
                assert witness is None
                for b in itertools.combinations(range(n), r + 1):
                    assert hg.induced_edge_count(g, b) <= k - 1
            else:
                assert len(witness.vertex_set) == r + 1
                assert hg.induced_edge_count(g, witness.vertex_set) >= k
                for e in witness.contained_edges:
                    assert set(e) <= set(witness.vertex_set)
                    assert e in g.edge_set


def test_daisy_free_chunk_invariance(g5320):
    dense = hg.complete_hypergraph(7, 3)
    for graph, k in ((g5320, 3), (dense, 3), (five_cycle(), 3)):
        base = hg.is_daisy_free(graph, k, chunks=1)
        for chunks in (2, 3, 9):
            assert hg.is_daisy_free(graph, k, chunks=chunks) == base


def test_pair_covering():
    for n, r in ((4, 2), (5, 3), (6, 4)):
        assert hg.is_pair_covering(hg.complete_hypergraph(n, r))
    for r in (3, 4, 5, 6):
        assert hg.is_pair_covering(hg.daisy_hypergraph(r, 3))
    single = hg.UniformHypergraph(r=3, n=5, edges=((0, 1, 2),))
    assert not hg.is_pair_covering(single)


def test_daisy_hypergraph_shape():
    h = hg.daisy_hypergraph(5, 3)
    assert h.n == 6 and h.num_edges == 3
    # the three edges omit the last three vertices respectively
    omitted = [set(range(6)) - set(e) for e in h.edges]
    assert sorted(next(iter(s)) for s in omitted) == [3, 4, 5]


def test_line_graph_examples(g5320):
    for r in range(2, 8):
        for k in range(2, r + 2):
            lg = hg.line_graph(hg.daisy_hypergraph(r, k))
            assert lg.n == k
            assert lg.is_complete()
    two_disjoint = hg.UniformHypergraph(r=2, n=4, edges=((0, 1), (2, 3)))
    assert hg.line_graph(two_disjoint).adjacency == frozenset()
    assert hg.line_graph(g5320).adjacency == frozenset({(0, 2), (1, 2), (1, 3)})


def test_blow_up_counts_and_encoding(g5320):
    single = hg.UniformHypergraph(r=3, n=3, edges=((0, 1, 2),))
    b = hg.blow_up(single, 2)
    assert b.num_edges == 8 and b.n == 6
    # clone y of vertex x is x*m + y
    assert (0, 2, 4) in b.edge_set and (1, 3, 5) in b.edge_set
    assert hg.blow_up(g5320, 1).edges == g5320.edges
    b32 = hg.blow_up(g5320, 2)
    assert b32.num_edges == 32
    assert hg.is_daisy_free(b32, 3)[0]
    with pytest.raises(ValueError):
        hg.blow_up(single, 0)


def test_blow_up_budget_guard():
    from daisy.subsets import EnumerationBudgetError

    g = hg.complete_hypergraph(6, 3)
    with pytest.raises(EnumerationBudgetError):
        hg.blow_up(g, 100, budget=10**4)


def test_blow_up_heredity_small():
    # freeness survives blowing up whenever the daisy is pair-covering (k >= 3)
    for r, k in ((3, 3), (4, 3), (4, 4)):
        for n in range(r + 1, 9):
            g = build_shift_graph(ShiftGraphSpec(n=n, r=r, t=k - 1, j=0))
            assert hg.is_daisy_free(g, k)[0]
            for m in (1, 2):
                assert hg.is_daisy_free(hg.blow_up(g, m), k)[0]


def test_link_graph_examples(g5320):
    tri = hg.link_graph(hg.complete_hypergraph(4, 3), 0)
    assert tri.r == 2 and tri.n == 3 and tri.num_edges == 3
    empty = hg.UniformHypergraph(r=3, n=5, edges=())
    assert hg.link_graph(empty, 2).num_edges == 0
    link = hg.link_graph(g5320, 0)
    assert link.edges == ((0, 3), (1, 2), (1, 3))
    with pytest.raises(ValueError):
        hg.link_graph(g5320, 9)
    with pytest.raises(ValueError):
        hg.link_graph(five_cycle(), 0)


def test_degree_bound_invariant(g5320):
    for g in (g5320, hg.complete_hypergraph(7, 3), hg.daisy_hypergraph(5, 4)):
        assert max(g.degrees()) * g.n >= g.r * g.num_edges


def test_edge_list_round_trip(tmp_path, g5320):
    text = hg.to_edge_list_text(g5320)
    assert text.splitlines()[0] == "3 5 4"
    assert hg.from_edge_list_text(text) == g5320
    assert hg.to_edge_list_text(hg.from_edge_list_text(text)) == text
    path = tmp_path / "g.txt"
    hg.write_edge_list(g5320, path)
    assert path.read_bytes().decode() == text
    assert hg.read_edge_list(path) == g5320


def test_edge_list_rejects_malformed():
    with pytest.raises(ValueError):
        hg.from_edge_list_text("")
    with pytest.raises(ValueError):
        hg.from_edge_list_text("3 5\n")
    with pytest.raises(ValueError):
        hg.from_edge_list_text("3 5 2\n0 1 2\n")
    with pytest.raises(ValueError):
        hg.from_edge_list_text("3 5 1\n0 1\n")
