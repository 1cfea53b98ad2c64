"""Counting labeled graphs with a prescribed degree sequence.

A degree sequence is kept as a plain tuple of positive ints in non-increasing
order (the canonical form).  ``count`` evaluates

    C(d) = sum over |S| = d_n, S subset of {1..n-1} of C(d / S)

where ``d / S`` drops the last vertex, decrements the entries indexed by S,
re-sorts and strips zeros.  Every count is a Python int, so there is no
overflow anywhere.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Iterator, Optional

DegreeSequence = tuple  # tuple[int, ...], canonical non-increasing, no zeros

EMPTY: DegreeSequence = ()


class ContractError(ValueError):
    """Raised when an operation is called outside its precondition."""


def canonicalize(raw: Iterable[int]) -> DegreeSequence:
    """Sort ``raw`` non-increasing and strip zeros.

    >>> canonicalize([2, 0, 3, 1])
    (3, 2, 1)
    """
    values = list(raw)
    for v in values:
        if v < 0:
            raise ValueError(f"negative degree {v} in {values!r}")
    return tuple(sorted((v for v in values if v), reverse=True))


def is_canonical(d: DegreeSequence) -> bool:
    return all(v > 0 for v in d) and all(a >= b for a, b in zip(d, d[1:]))


def reduce(d: DegreeSequence, subset: Iterable[int]) -> DegreeSequence:
    """Remove the last vertex of ``d`` and decrement its neighbours.

    ``subset`` holds 0-based positions among the first ``len(d) - 1``
    entries and must have exactly ``d[-1]`` elements.
    """
    n = len(d)
    if n < 2:
        raise ContractError("reduce needs at least two vertices")
    chosen = set(subset)
    if len(chosen) != d[-1]:
        raise ContractError(f"subset has {len(chosen)} elements, expected {d[-1]}")
    if any(not 0 <= i < n - 1 for i in chosen):
        raise ContractError(f"subset {sorted(chosen)} out of range 0..{n - 2}")
    return canonicalize(v - (i in chosen) for i, v in enumerate(d[:-1]))


def k_subsets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Yield every k-subset of ``range(n)`` once, in lexicographic order.

    Streams; only the current subset is held in memory.  ``k > n`` yields
    nothing.
    """
    if n < 0 or k < 0:
        raise ContractError("n and k must be nonnegative")
    return itertools.combinations(range(n), k)


@dataclass
class RecursionStats:
    leaves: int = 0
    calls: int = 0
    cache_hits: int = 0
    cache_misses: int = 0

    @property
    def hit_rate(self) -> float:
        looked = self.cache_hits + self.cache_misses
        return self.cache_hits / looked if looked else 0.0

    def as_dict(self) -> dict[str, int]:
        return {
            "leaves": self.leaves,
            "calls": self.calls,
            "cache_hits": self.cache_hits,
            "cache_misses": self.cache_misses,
        }


@dataclass
class MemoCache:
    """Table of already computed counts keyed by canonical sequence.

    Only exact values are ever inserted, so sharing one cache between
    threads is safe: two workers racing on the same key store the same
    number.  ``get_or_insert`` keeps the first value written.
    """

    entries: dict = field(default_factory=dict)
    stats: RecursionStats = field(default_factory=RecursionStats)

    def __post_init__(self) -> None:
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, d: DegreeSequence) -> bool:
        return d in self.entries

    def get(self, d: DegreeSequence) -> Optional[int]:
        return self.entries.get(d)

    def get_or_insert(self, d: DegreeSequence, value: int) -> int:
        with self._lock:
            return self.entries.setdefault(d, value)

    def update(self, other: "MemoCache | dict") -> None:
        items = other.entries if isinstance(other, MemoCache) else other
        with self._lock:
            for key, value in items.items():
                self.entries.setdefault(key, value)


def _blocks(d: DegreeSequence) -> list[tuple[int, int]]:
    """Runs of equal values in ``d`` as (value, multiplicity)."""
    return [(v, len(list(g))) for v, g in itertools.groupby(d)]


def _children(d: DegreeSequence) -> Iterator[tuple[DegreeSequence, int]]:
    """Distinct ``d / S`` with the number of subsets S producing each.

    Positions holding equal degrees are interchangeable, so a subset is
    characterised by how many positions it takes from each run.  Taking
    ``t`` from a run of ``c`` copies of ``v`` can happen in comb(c, t) ways
    and leaves ``c - t`` copies of ``v`` followed by ``t`` of ``v - 1``,
    which stays sorted because the next run holds values below ``v``.
    """
    k = d[-1]
    blocks = _blocks(d[:-1])
    # capacity[j]: how many positions runs j.. can still absorb
    capacity = [0] * (len(blocks) + 1)
    for j in range(len(blocks) - 1, -1, -1):
        capacity[j] = capacity[j + 1] + blocks[j][1]

    def walk(j: int, left: int, prefix: list[int], weight: int):
        if left == 0:
            tail: list[int] = []
            for v, c in blocks[j:]:
                tail.extend([v] * c)
            child = prefix + tail
            while child and child[-1] == 0:
                child.pop()
            yield tuple(child), weight
            return
        if capacity[j] < left:
            return
        v, c = blocks[j]
        for t in range(min(c, left), -1, -1):
            if capacity[j + 1] < left - t:
                break
            yield from walk(
                j + 1,
                left - t,
                prefix + [v] * (c - t) + [v - 1] * t,
                weight * comb(c, t),
            )

    yield from walk(0, k, [], 1)


def count(
    d: DegreeSequence,
    cache: Optional[MemoCache] = None,
    *,
    prune: bool = False,
) -> int:
    """Number of labeled simple graphs in which vertex i has degree ``d[i]``.

    ``cache`` is read and extended; pass the same cache to related calls to
    share subresults.  With ``prune`` an Erdős–Gallai test cuts off
    unrealizable branches early; the result is the same either way.
    """
    if not is_canonical(d):
        raise ContractError(f"{d!r} is not canonical")
    if cache is None:
        cache = MemoCache()
    if sum(d) % 2:
        return 0

    if prune:
        from degseq.realizability import erdos_gallai
    stats = cache.stats
    entries = cache.entries

    # The degree sum drops by 2 * d[-1] per step, so parity holds throughout.
    def rec(seq: DegreeSequence) -> int:
        stats.calls += 1
        n = len(seq)
        if n == 0:
            return 1
        if n == 1 or seq[0] >= n:
            return 0
        hit = entries.get(seq)
        if hit is not None:
            stats.cache_hits += 1
            return hit
        stats.cache_misses += 1
        total = 0
        if not prune or erdos_gallai(seq):
            for child, weight in _children(seq):
                total += weight * rec(child)
        return cache.get_or_insert(seq, total)

    return rec(d)


def count_naive(d: DegreeSequence, stats: Optional[RecursionStats] = None) -> int:
    """Evaluate the recurrence literally: one recursive call per subset, no cache.

    Exponential; meant for small inputs, complexity measurements and as a
    cross-check of ``count``.  ``stats.leaves`` receives the number of
    terminal nodes of the recursion tree.
    """
    if not is_canonical(d):
        raise ContractError(f"{d!r} is not canonical")
    if stats is None:
        stats = RecursionStats()

    def rec(seq: DegreeSequence) -> int:
        stats.calls += 1
        n = len(seq)
        if n == 0:
            stats.leaves += 1
            return 1
        if n == 1 or sum(seq) % 2:
            stats.leaves += 1
            return 0
        subsets = k_subsets(n - 1, seq[-1])
        first = next(subsets, None)
        if first is None:
            stats.leaves += 1
            return 0
        total = rec(reduce(seq, first))
        for s in subsets:
            total += rec(reduce(seq, s))
        return total

    return rec(d)


def count_leaves(d: DegreeSequence) -> int:
    """Leaves of the unmemoized recursion tree of ``d``.

    A node is a leaf when it has no summands: the empty sequence, a single
    vertex, an odd degree sum, or a last degree larger than the number of
    remaining vertices.  The leaf count of a node depends only on its
    sequence, so it is computed through the grouped children with a
    private table instead of walking the tree.
    """
    if not is_canonical(d):
        raise ContractError(f"{d!r} is not canonical")
    table: dict[DegreeSequence, int] = {}

    def rec(seq: DegreeSequence) -> int:
        n = len(seq)
        if n <= 1 or seq[-1] > n - 1:
            return 1
        hit = table.get(seq)
        if hit is not None:
            return hit
        total = sum(w * rec(child) for child, w in _children(seq))
        table[seq] = total
        return total

    if sum(d) % 2:
        return 1
    return rec(d)
