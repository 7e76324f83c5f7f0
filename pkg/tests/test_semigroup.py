import math
from functools import reduce

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.errors import InputError, UnrepresentableError
from semigroup.frobenius import GeneratorSet, decompose_pq, fill_length, frobenius, representable
from semigroup.gapfill import GapFiller, concatenate


def brute_force_frobenius(gens):
    g = reduce(math.gcd, gens)
    reduced = sorted({x // g for x in gens})
    if 1 in reduced:
        return -g
    limit = reduced[0] * reduced[-1]
    reachable = [False] * (limit + 1)
    reachable[0] = True
    for m in range(1, limit + 1):
        reachable[m] = any(m >= x and reachable[m - x] for x in reduced)
    return max(m for m in range(limit + 1) if not reachable[m]) * g


@pytest.mark.parametrize(
    "gens, expected",
    [((2, 3), 1), ((3, 4), 5), ((4, 6), 2), ((6, 9, 20), 43), ((1, 7), -1), ((5,), -5)],
)
def test_frobenius_values(gens, expected):
    assert frobenius(GeneratorSet.of(gens)).frobenius == expected


def test_frobenius_reports_gcd():
    assert frobenius(GeneratorSet.of([4, 6])).gcd == 2


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(min_value=1, max_value=30), min_size=1, max_size=3))
def test_frobenius_matches_brute_force(gens):
    assert frobenius(GeneratorSet.of(gens)).frobenius == brute_force_frobenius(gens)


def test_representable():
    gens = GeneratorSet.of([3, 5])
    assert [m for m in range(12) if representable(m, gens)] == [0, 3, 5, 6, 8, 9, 10, 11]
    assert not representable(-1, gens)


def test_generators_must_be_positive():
    with pytest.raises(InputError):
        GeneratorSet.of([0, 3])
    with pytest.raises(InputError):
        GeneratorSet.of([])


def test_decompose_example():
    assert decompose_pq(7, 2) == (2, 1)


def test_decompose_every_length_above_the_threshold():
    for n in range(1, 13):
        for m in range(n * (n + 1), n * (n + 1) + 51):
            p, q = decompose_pq(m, n)
            assert p >= 0 and q >= 0
            assert p * n + q * (n + 1) == m
            # no representation uses more n-blocks
            for bigger in range(p + 1, m // n + 1):
                assert (m - bigger * n) % (n + 1) != 0


def test_decompose_rejects_short_lengths():
    with pytest.raises(UnrepresentableError):
        decompose_pq(5, 3)
    with pytest.raises(InputError):
        decompose_pq(0, 3)


def test_fill_length_sums_to_target():
    parts = fill_length(23, [4, 7])
    assert sum(parts) == 23
    assert set(parts) <= {4, 7}
    with pytest.raises(UnrepresentableError):
        fill_length(9, [4, 7])


def test_gap_filler_kernel_uses_every_block_once():
    filler = GapFiller([("a", "b"), ("c", "d", "e"), ("a", "b")])
    assert filler.kernel() == (("a", "b"), ("c", "d", "e"))
    assert filler.kernel_length() == 5
    assert filler.frobenius_number == 1


def test_gap_filler_is_consistent():
    filler = GapFiller([("a", "b"), ("c", "d", "e")])
    first = filler.fill(11)
    assert sum(len(b) for b in first) == 11
    assert filler.fill(11) == first
    assert len(concatenate(filler.pad_kernel(12))) == 12


def test_gap_filler_rejects_gaps_below_the_frobenius_number():
    filler = GapFiller([("a", "b", "c"), ("d", "e", "f", "g")])
    with pytest.raises(UnrepresentableError):
        filler.fill(5)
    with pytest.raises(UnrepresentableError):
        filler.pad_kernel(3)
