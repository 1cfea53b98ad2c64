"""Graphicality tests for degree sequences."""

from __future__ import annotations


def erdos_gallai(d) -> bool:
    """True iff the non-increasing sequence ``d`` is the degree sequence of a simple graph."""
    n = len(d)
    if sum(d) % 2:
        return False
    left = 0
    for k in range(1, n + 1):
        left += d[k - 1]
        right = k * (k - 1) + sum(min(v, k) for v in d[k:])
        if left > right:
            return False
    return True


def havel_hakimi(d) -> bool:
    """Decide graphicality by repeatedly connecting the largest-degree vertex.

    The sequence is fully re-sorted every round.
    """
    if any(v < 0 for v in d):
        return False
    seq = sorted((v for v in d if v), reverse=True)
    while seq:
        top = seq.pop(0)
        if top > len(seq):
            return False
        for i in range(top):
            seq[i] -= 1
            if seq[i] < 0:
                return False
        seq = sorted((v for v in seq if v), reverse=True)
    return True
