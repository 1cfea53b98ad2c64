"""Exhaustive agreement check between the recursive counter and both oracles."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from degseq.core import MemoCache, count
from degseq.oracles import BRUTE_FORCE_MAX_N, brute_force_count, mckay_count


def canonical_sequences(nmax: int, dmax: int) -> Iterator[tuple[int, ...]]:
    """Every non-increasing sequence with 0 <= length <= nmax and entries in 1..dmax."""
    for n in range(nmax + 1):
        yield from itertools.combinations_with_replacement(range(dmax, 0, -1), n)


@dataclass(frozen=True)
class Check:
    sequence: tuple
    recursive: int
    brute_force: int
    mckay: int

    @property
    def ok(self) -> bool:
        return self.recursive == self.brute_force == self.mckay


def cross_check(
    nmax: int, dmax: int, *, prune: bool = False, max_n: int = BRUTE_FORCE_MAX_N
) -> Iterator[Check]:
    cache = MemoCache()
    for d in canonical_sequences(nmax, dmax):
        yield Check(d, count(d, cache, prune=prune), brute_force_count(d, max_n=max_n), mckay_count(d))
