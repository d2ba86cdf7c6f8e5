import itertools
import math

import pytest

from daisy import subsets


def test_colex_rank_unrank_roundtrip():
    n, r = 9, 4
    ranked = sorted(itertools.combinations(range(n), r), key=subsets.colex_rank)
    for rank, subset in enumerate(ranked):
        assert subsets.colex_rank(subset) == rank
        assert subsets.colex_unrank(rank, r) == subset


def test_lex_rank_matches_itertools_order():
    n, r = 8, 3
    for rank, subset in enumerate(itertools.combinations(range(n), r)):
        assert subsets.lex_rank(subset, n) == rank
        assert subsets.lex_unrank(rank, n, r) == subset


@pytest.mark.parametrize("n,r", [(7, 3), (9, 2), (10, 5), (6, 6)])
def test_generators_cover_everything_once(n, r):
    expected = set(itertools.combinations(range(n), r))
    assert set(subsets.combinations_lex(n, r)) == expected
    assert set(subsets.combinations_colex(n, r)) == expected
    assert len(list(subsets.combinations_lex(n, r))) == math.comb(n, r)


def test_chunked_enumeration_is_partition():
    n, r = 10, 4
    total = math.comb(n, r)
    for chunks in (1, 3, 7, total):
        seen = []
        for lo, hi in subsets.rank_chunks(total, chunks):
            seen.extend(subsets.combinations_colex(n, r, lo, hi))
        assert seen == list(subsets.combinations_colex(n, r))


def test_rank_chunks_bounds():
    assert subsets.rank_chunks(10, 3) == [(0, 4), (4, 7), (7, 10)]
    assert subsets.rank_chunks(2, 5) == [(0, 1), (1, 2)]
    assert subsets.rank_chunks(0, 4) == [(0, 0)]


def test_budget_guard(monkeypatch):
    with pytest.raises(subsets.EnumerationBudgetError):
        subsets.check_budget(60, 30, budget=10**6)
    assert subsets.check_budget(10, 3) == 120
    monkeypatch.setenv(subsets.BUDGET_ENV_VAR, "5")
    with pytest.raises(subsets.EnumerationBudgetError):
        subsets.check_budget(10, 3)
