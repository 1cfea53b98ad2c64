import itertools

import pytest

from degseq.core import count
from degseq.realizability import erdos_gallai, havel_hakimi


@pytest.mark.parametrize(
    "d, expected",
    [
        ((1, 1), True),
        ((3, 1, 1), False),
        ((2, 2, 2, 2), True),
        ((2, 2, 2), True),
        ((6, 1, 1, 1, 1, 1, 1), True),  # star on 7 vertices
        ((5, 1, 1, 1, 1, 1, 1), False),  # odd degree sum
        ((4, 4, 4, 1, 1), False),
        ((), True),
        ((1,), False),
    ],
)
def test_examples(d, expected):
    assert erdos_gallai(d) is expected
    assert havel_hakimi(d) is expected


def all_sequences(nmax, dmax):
    for n in range(nmax + 1):
        yield from itertools.combinations_with_replacement(range(dmax, 0, -1), n)


def test_agreement_exhaustive():
    for d in all_sequences(7, 6):
        assert erdos_gallai(d) == havel_hakimi(d), d


def test_realizable_iff_positive_count():
    for d in all_sequences(7, 6):
        assert erdos_gallai(d) == (count(d) > 0), d
