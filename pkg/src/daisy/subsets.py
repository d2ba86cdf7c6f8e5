"""Ranking, unranking, and chunked enumeration of r-subsets.

Exhaustive scans over all C(n, r) subsets of {0..n-1} are the workhorse of
every oracle in this package.  Rank/unrank (in both lexicographic and
colexicographic order) let a scan be partitioned into independent rank
ranges whose results merge deterministically, independent of how many
chunks or workers are used.
"""

from __future__ import annotations

import math
import os
from collections.abc import Iterator, Sequence

DEFAULT_ENUMERATION_BUDGET = 10**8
BUDGET_ENV_VAR = "DAISY_BUDGET"


class EnumerationBudgetError(RuntimeError):
    """A subset scan would exceed the configured enumeration budget."""


def enumeration_budget() -> int:
    """Active subset-scan budget; the DAISY_BUDGET env var overrides it."""
    raw = os.environ.get(BUDGET_ENV_VAR)
    return int(raw) if raw else DEFAULT_ENUMERATION_BUDGET


def check_budget(n: int, r: int, budget: int | None = None) -> int:
    """Return C(n, r) after checking it against the enumeration budget."""
    total = math.comb(n, r)
    limit = enumeration_budget() if budget is None else budget
    if total > limit:
        raise EnumerationBudgetError(
            f"C({n},{r}) = {total} subsets exceeds the enumeration budget {limit}"
        )
    return total


def colex_rank(subset: Sequence[int]) -> int:
    """Colex rank of an ascending r-subset (independent of n)."""
    return sum(math.comb(c, i + 1) for i, c in enumerate(subset))


def colex_unrank(rank: int, r: int) -> tuple[int, ...]:
    """Ascending r-subset with the given colex rank (combinadic digits)."""
    out = [0] * r
    for i in range(r - 1, -1, -1):
        # largest c with C(c, i+1) <= rank; start the search just above i
        c = i
        while math.comb(c + 1, i + 1) <= rank:
            c += 1
        out[i] = c
        rank -= math.comb(c, i + 1)
    return tuple(out)


def lex_rank(subset: Sequence[int], n: int) -> int:
    """Rank of an ascending r-subset in itertools.combinations order."""
    r = len(subset)
    rank = 0
    prev = -1
    for i, c in enumerate(subset):
        for skipped in range(prev + 1, c):
            rank += math.comb(n - 1 - skipped, r - i - 1)
        prev = c
    return rank


def lex_unrank(rank: int, n: int, r: int) -> tuple[int, ...]:
    """Ascending r-subset of {0..n-1} with the given lex rank."""
    out = []
    c = 0
    for i in range(r):
        while True:
            block = math.comb(n - 1 - c, r - i - 1)
            if rank < block:
                break
            rank -= block
            c += 1
        out.append(c)
        c += 1
    return tuple(out)


def combinations_colex(
    n: int, r: int, start: int = 0, stop: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Yield r-subsets of {0..n-1} in colex order for ranks [start, stop)."""
    total = math.comb(n, r)
    stop = total if stop is None else min(stop, total)
    if start >= stop:
        return
    s = list(colex_unrank(start, r))
    for _ in range(stop - start):
        yield tuple(s)
        i = 0
        while i + 1 < r and s[i] + 1 == s[i + 1]:
            i += 1
        s[i] += 1
        for j in range(i):
            s[j] = j


def combinations_lex(
    n: int, r: int, start: int = 0, stop: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Yield r-subsets of {0..n-1} in lex order for ranks [start, stop)."""
    total = math.comb(n, r)
    stop = total if stop is None else min(stop, total)
    if start >= stop:
        return
    s = list(lex_unrank(start, n, r))
    for _ in range(stop - start):
        yield tuple(s)
        i = r - 1
        while i >= 0 and s[i] == n - r + i:
            i -= 1
        if i < 0:
            return
        s[i] += 1
        for j in range(i + 1, r):
            s[j] = s[i] + (j - i)


def rank_chunks(total: int, chunks: int) -> list[tuple[int, int]]:
    """Split the rank range [0, total) into near-equal contiguous chunks."""
    chunks = max(1, min(chunks, total)) if total else 1
    step, extra = divmod(total, chunks)
    bounds = []
    lo = 0
    for i in range(chunks):
        hi = lo + step + (1 if i < extra else 0)
        bounds.append((lo, hi))
        lo = hi
    return bounds
