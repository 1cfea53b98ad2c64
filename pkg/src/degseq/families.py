"""Counts for the graph families tabulated in the tables: regular graphs,
binary-tree degree sequences and complete bipartite degree sequences.

Every wrapper takes an optional :class:`~degseq.core.MemoCache`; reuse one
across a whole sweep.
"""

from __future__ import annotations

from math import comb, factorial
from typing import Optional

from degseq.core import MemoCache, count


def regular_sequence(n: int, m: int) -> tuple[int, ...]:
    return (m,) * n


def regular_count(n: int, m: int, cache: Optional[MemoCache] = None, *, prune: bool = False) -> int:
    """Labeled m-regular graphs on n vertices."""
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    if n == 0:
        return 1
    if m >= n or (n % 2 and m % 2):
        return 0
    return count(regular_sequence(n, m), cache, prune=prune)


def binary_tree_sequence(k: int) -> tuple[int, ...]:
    """k - 1 internal vertices of degree 3 and k + 1 leaves."""
    return (3,) * (k - 1) + (1,) * (k + 1)


def binary_tree_count(k: int, cache: Optional[MemoCache] = None, *, prune: bool = False) -> int:
    """Labeled graphs on 2k vertices with the degree multiset of a binary tree.

    The fixed-assignment count is multiplied by comb(2k, k - 1), the number
    of ways to choose which vertices carry degree 3.
    """
    if k < 1:
        raise ValueError("k must be positive")
    return comb(2 * k, k - 1) * count(binary_tree_sequence(k), cache, prune=prune)


def bipartite_sequence(n: int, m: int) -> tuple[int, ...]:
    """Degree sequence of K_{n,m}: n copies of m, then m copies of n."""
    if not 1 <= n <= m:
        raise ValueError(f"need 1 <= n <= m, got n={n}, m={m}")
    return (m,) * n + (n,) * m


def bipartite_count_raw(n: int, m: int, cache: Optional[MemoCache] = None, *, prune: bool = False) -> int:
    """Fixed-assignment count for the K_{n,m} degree sequence, no correction factor.

    These are the values printed in the bipartite table.
    """
    return count(bipartite_sequence(n, m), cache, prune=prune)


def bipartite_count_eq8(n: int, m: int, cache: Optional[MemoCache] = None, *, prune: bool = False) -> int:
    """Raw count scaled by comb(n + m, n) when n != m.

    This is the multiset count (which vertices are "black" is free).  It
    does not match the printed table off the diagonal.
    """
    raw = bipartite_count_raw(n, m, cache, prune=prune)
    return raw if n == m else comb(n + m, n) * raw


def moon_tree_count(d) -> int:
    """Labeled trees in which vertex i has degree d[i]: (n-2)! / prod (d_i - 1)!.

    Zero when ``d`` cannot be a tree's degree sequence.
    """
    n = len(d)
    if n < 2 or sum(d) != 2 * (n - 1) or any(v < 1 for v in d):
        return 0
    result = factorial(n - 2)
    for v in d:
        result //= factorial(v - 1)
    return result
