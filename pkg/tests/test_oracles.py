import itertools
from collections import Counter
from math import comb

import pytest

from degseq.oracles import (
    OracleSizeError,
    brute_force_count,
    brute_force_multiset_count,
    degree_vector_tally,
    mckay_count,
    mckay_multiplication_count,
    vertex_pairs,
)


def loop_tally(n):
    """Plain loop over edge masks, no numpy and no encoding tricks."""
    pairs = vertex_pairs(n)
    tally = Counter()
    for mask in range(1 << len(pairs)):
        deg = [0] * n
        for e, (i, j) in enumerate(pairs):
            if mask >> e & 1:
                deg[i] += 1
                deg[j] += 1
        tally[tuple(deg)] += 1
    return tally


@pytest.mark.parametrize("n", range(0, 6))
def test_tally_matches_plain_loop(n):
    expected = loop_tally(n)
    for d in itertools.product(range(n), repeat=n):
        assert brute_force_count(d) == expected[d], d


def test_tally_totals():
    for n in range(1, 8):
        assert int(degree_vector_tally(n).sum()) == 2 ** (n * (n - 1) // 2)


@pytest.mark.parametrize(
    "d, expected", [((1, 1), 1), ((2, 2, 2, 2), 3), ((3, 3, 2, 2, 2), 7), ((), 1), ((1,), 0)]
)
def test_brute_force_examples(d, expected):
    assert brute_force_count(d) == expected


@pytest.mark.parametrize(
    "d, expected", [((1, 1), 1), ((3, 1, 1, 1), 4), ((3, 3, 1, 1, 1, 1), 90)]
)
def test_multiset_examples(d, expected):
    assert brute_force_multiset_count(d) == expected


@pytest.mark.slow
def test_brute_force_eight_vertices():
    assert brute_force_count((3,) * 8, max_n=8) == 19355
    assert brute_force_count((4, 4, 4, 4, 2, 2, 2, 2), max_n=8) == mckay_count((4, 4, 4, 4, 2, 2, 2, 2))


def test_brute_force_guard():
    with pytest.raises(OracleSizeError):
        brute_force_count((1,) * 8)
    with pytest.raises(OracleSizeError):
        brute_force_multiset_count((2,) * 9)


@pytest.mark.parametrize(
    "d, expected", [((1, 1, 1, 1), 3), ((2, 2, 2), 1), ((3, 3, 3, 3, 3, 3), 70), ((), 1), ((2,), 0)]
)
def test_mckay_examples(d, expected):
    assert mckay_count(d) == expected


def test_mckay_budget():
    with pytest.raises(OracleSizeError):
        mckay_count((9,) * 10, budget=1000)


def test_mckay_nine_vertices():
    # second-oracle range n <= 9, degrees <= 4: spot check against the tables
    assert mckay_count((4,) * 9) == 1024380
    assert mckay_count((2,) * 9) == 30016
    assert mckay_count((3,) * 8) == 19355


def test_mckay_agrees_with_brute_force_unsorted():
    # the generating polynomial does not care about order
    for d in itertools.product(range(4), repeat=5):
        assert mckay_count(d) == brute_force_count(d), d


@pytest.mark.parametrize("n, expected", [(1, 0), (2, 1), (3, 7), (4, 63)])
def test_mckay_multiplications(n, expected):
    assert mckay_multiplication_count(n) == expected


def test_multiset_factor_law():
    for n in range(2, 8):
        for a in range(1, n):
            for b in range(1, a):
                for p in range(1, n):
                    q = n - p
                    d = (a,) * p + (b,) * q
                    assert brute_force_multiset_count(d) == comb(n, p) * brute_force_count(d), d


@pytest.mark.parametrize("n", range(2, 8))
def test_complement_symmetry(n):
    for m in range(n):
        assert brute_force_count((m,) * n) == brute_force_count((n - 1 - m,) * n)
