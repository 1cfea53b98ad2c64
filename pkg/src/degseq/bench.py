"""Growth measurements for the recursion: leaves vs. memoized work vs. the
naive generating-polynomial expansion."""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import comb
from typing import Iterable, Optional

from degseq.core import MemoCache, RecursionStats, count, count_leaves, count_naive
from degseq.families import binary_tree_sequence, bipartite_sequence, regular_sequence
from degseq.oracles import mckay_multiplication_count

LEAF_BUDGET = 10**6

COLUMNS = (
    "family", "n", "m", "vertices", "count", "leaves", "leaf_bound",
    "cache_misses", "memo_seconds", "naive_seconds", "mckay_multiplications",
)


@dataclass
class BenchRow:
    family: str
    n: int
    m: Optional[int]
    sequence: tuple
    count: int
    leaves: int
    leaf_bound: Optional[int]
    cache_misses: int
    memo_seconds: float
    naive_seconds: Optional[float]  # None: skipped, leaves above budget
    mckay_multiplications: int

    def as_row(self, timings: bool = True) -> list[str]:
        def seconds(x):
            if x is None:
                return "skipped"
            return f"{x:.6f}" if timings else ""

        return [
            self.family,
            str(self.n),
            "" if self.m is None else str(self.m),
            str(len(self.sequence)),
            str(self.count),
            str(self.leaves),
            "" if self.leaf_bound is None else str(self.leaf_bound),
            str(self.cache_misses),
            seconds(self.memo_seconds),
            seconds(self.naive_seconds),
            str(self.mckay_multiplications),
        ]


def leaf_bound(n: int, m: int) -> int:
    """Loose form of the leaf bound for degrees at most m: comb(n, m)**n."""
    return comb(n, m) ** n


def measure(family: str, n: int, m: Optional[int], sequence: tuple, *, leaf_budget: int = LEAF_BUDGET) -> BenchRow:
    leaves = count_leaves(sequence)

    cache = MemoCache()
    start = time.perf_counter()
    value = count(sequence, cache)
    memo_seconds = time.perf_counter() - start

    naive_seconds = None
    if leaves <= leaf_budget:
        stats = RecursionStats()
        start = time.perf_counter()
        naive = count_naive(sequence, stats)
        naive_seconds = time.perf_counter() - start
        if naive != value or stats.leaves != leaves:
            raise AssertionError(f"naive recursion disagrees on {sequence}")

    maxdeg = max(sequence, default=0)
    bound = leaf_bound(len(sequence), maxdeg) if maxdeg else None
    return BenchRow(
        family=family,
        n=n,
        m=m,
        sequence=sequence,
        count=value,
        leaves=leaves,
        leaf_bound=bound,
        cache_misses=cache.stats.cache_misses,
        memo_seconds=memo_seconds,
        naive_seconds=naive_seconds,
        mckay_multiplications=mckay_multiplication_count(max(len(sequence), 1)),
    )


def family_points(family: str, ns: Iterable[int], ms: Iterable[int] = ()) -> list[tuple[int, Optional[int], tuple]]:
    """(n, m, sequence) triples to measure.  For ``tree``, n plays the role of k."""
    ms = list(ms)
    points = []
    for n in ns:
        if family == "regular":
            points.extend((n, m, regular_sequence(n, m)) for m in ms)
        elif family == "tree":
            points.append((n, None, binary_tree_sequence(n)))
        elif family == "bipartite":
            points.extend((n, m, bipartite_sequence(n, m)) for m in ms if n <= m)
        else:
            raise ValueError(f"unknown family {family!r}")
    return points
