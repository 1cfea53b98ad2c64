"""Independent ground truth for the recursive counter.

``brute_force_count`` looks at every edge subset of K_n, ``mckay_count``
extracts one coefficient of prod_{i<j} (1 + x_i x_j).  Neither shares code
with :mod:`degseq.core`.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import prod

import numpy as np

BRUTE_FORCE_MAX_N = 7
MCKAY_STATE_BUDGET = 10**7

_CHUNK_BITS = 20


class OracleSizeError(ValueError):
    """The requested instance is larger than the oracle is allowed to handle."""


def vertex_pairs(n: int) -> list[tuple[int, int]]:
    """Pairs (i, j), i < j, in lexicographic order: the bit order of edge masks."""
    return list(itertools.combinations(range(n), 2))


@lru_cache(maxsize=None)
def degree_vector_tally(n: int) -> np.ndarray:
    """Number of edge subsets of K_n for every labeled degree vector.

    Entry ``sum(deg[v] * n**v)`` counts the subsets with degree vector
    ``deg``.  Masks are processed in chunks of 2**20 so memory stays flat.
    """
    if n <= 1:
        out = np.zeros(1, dtype=np.int64)
        out[0] = 1
        return out
    pairs = vertex_pairs(n)
    n_edges = len(pairs)
    weights = n ** np.arange(n, dtype=np.int64)
    # each edge adds n**i + n**j to the encoded degree vector
    edge_codes = np.array([weights[i] + weights[j] for i, j in pairs], dtype=np.int64)
    size = n**n
    tally = np.zeros(size, dtype=np.int64)
    chunk = 1 << min(_CHUNK_BITS, n_edges)
    low_bits = min(_CHUNK_BITS, n_edges)
    low = np.arange(chunk, dtype=np.int64)
    low_code = np.zeros(chunk, dtype=np.int64)
    for e in range(low_bits):
        low_code += ((low >> e) & 1) * edge_codes[e]
    for high in range(1 << (n_edges - low_bits)):
        offset = 0
        for e in range(low_bits, n_edges):
            if (high >> (e - low_bits)) & 1:
                offset += int(edge_codes[e])
        tally += np.bincount(low_code + offset, minlength=size)
    return tally


def _check_size(d, max_n: int) -> None:
    if len(d) > max_n:
        raise OracleSizeError(
            f"brute force over {len(d)} vertices means 2**{len(d) * (len(d) - 1) // 2} "
            f"edge subsets; limit is n <= {max_n}"
        )


def _code(degrees, n: int) -> int:
    return sum(v * n**i for i, v in enumerate(degrees))


def brute_force_count(d, *, max_n: int = BRUTE_FORCE_MAX_N) -> int:
    """Edge subsets of K_n whose degree vector is exactly ``d``."""
    _check_size(d, max_n)
    n = len(d)
    if n == 0:
        return 1
    if any(v >= n for v in d):
        return 0
    return int(degree_vector_tally(n)[_code(d, n)])


def brute_force_multiset_count(d, *, max_n: int = BRUTE_FORCE_MAX_N) -> int:
    """Edge subsets of K_n whose sorted degree vector equals sorted ``d``."""
    _check_size(d, max_n)
    n = len(d)
    if n == 0:
        return 1
    if any(v >= n for v in d):
        return 0
    tally = degree_vector_tally(n)
    return sum(int(tally[_code(p, n)]) for p in set(itertools.permutations(d)))


def mckay_count(d, *, budget: int = MCKAY_STATE_BUDGET) -> int:
    """Coefficient of x_1**d_1 ... x_n**d_n in prod_{i<j} (1 + x_i x_j).

    The product is expanded one factor at a time over exponent vectors.
    Vectors exceeding ``d`` anywhere are dropped, and once every factor
    involving vertex i has been applied its exponent must equal ``d[i]``.
    """
    n = len(d)
    states = prod(v + 1 for v in d)
    if states > budget:
        raise OracleSizeError(f"{states} exponent vectors exceed the budget of {budget}")
    target = tuple(d)
    poly: dict[tuple[int, ...], int] = {(0,) * n: 1}
    for i, j in vertex_pairs(n):
        nxt: dict[tuple[int, ...], int] = {}
        for vec, coeff in poly.items():
            nxt[vec] = nxt.get(vec, 0) + coeff
            if vec[i] < target[i] and vec[j] < target[j]:
                bumped = list(vec)
                bumped[i] += 1
                bumped[j] += 1
                key = tuple(bumped)
                nxt[key] = nxt.get(key, 0) + coeff
        if j == n - 1:
            # last factor touching vertex i
            nxt = {vec: c for vec, c in nxt.items() if vec[i] == target[i]}
        poly = nxt
    return poly.get(target, 0)


def mckay_multiplication_count(n: int) -> int:
    """Term multiplications of the naive, untruncated expansion on n vertices.

    Factor k multiplies 2**(k-1) terms, so the total is 2**binom(n, 2) - 1.
    """
    if n < 1:
        raise ValueError("n must be positive")
    return sum(2 ** (k - 1) for k in range(1, n * (n - 1) // 2 + 1))
