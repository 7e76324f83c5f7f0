import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from compression.family import CodeFamily, build_family, choose_ell, marker_positions
from core.errors import InputError
from symbolic.language import entropy_limit


@pytest.mark.parametrize(
    "h,ell",
    [(0.0, 2), (1.0, 3), (math.log2(3), 4), (math.log2((1 + 5**0.5) / 2), 2), (1.5, 3)],
)
def test_choose_ell_exceeds_two_to_the_entropy(h, ell):
    assert choose_ell(h) == ell
    assert ell > 2**h


def test_choose_ell_rejects_negative_entropy():
    with pytest.raises(InputError):
        choose_ell(-0.1)


def test_smallest_family():
    family = CodeFamily(2, 1)
    assert family.marker == ("1", "0")
    assert family.blocks(2) == ()
    assert ["".join(b) for b in family.blocks(3)] == ["100", "101"]
    assert ["".join(b) for b in family.blocks(4)] == ["1000", "1001", "1011"]
    assert [family.count(n) for n in range(3, 10)] == [n - 1 for n in range(3, 10)]


@pytest.mark.parametrize("ell,s,top", [(2, 1, 10), (2, 2, 10), (2, 3, 10), (3, 1, 8), (3, 2, 8)])
def test_count_matches_enumeration(ell, s, top):
    family = CodeFamily(ell, s)
    for n in range(1, top + 1):
        blocks = family.blocks(n)
        assert family.count(n) == len(blocks) == len(set(blocks))
        assert list(blocks) == sorted(blocks)
        assert all(len(b) == n and b[: s + 1] == family.marker for b in blocks)


@pytest.mark.parametrize("ell,s,top", [(2, 1, 8), (2, 2, 8), (3, 1, 6), (3, 2, 6)])
def test_marker_occurs_only_at_block_starts(ell, s, top):
    family = CodeFamily(ell, s)
    blocks = ["".join(b) for n in range(family.min_length, top + 1) for b in family.blocks(n)]
    for a, b in itertools.product(blocks, repeat=2):
        assert marker_positions(family, a + b) == [0, len(a)]


@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(st.integers(4, 7), st.integers(0, 10_000)), min_size=1, max_size=4))
def test_concatenations_split_uniquely(picks):
    family = CodeFamily(3, 2)
    chosen = []
    for n, i in picks:
        blocks = family.blocks(n)
        chosen.append("".join(blocks[i % len(blocks)]))
    starts = list(itertools.accumulate([0] + [len(b) for b in chosen[:-1]]))
    assert marker_positions(family, "".join(chosen)) == starts


def test_longer_markers_outgrow_the_golden_mean(golden):
    h = entropy_limit(golden)
    assert CodeFamily(2, 1).rate(40) < h
    assert CodeFamily(2, 3).rate(40) > h
    assert CodeFamily(3, 1).rate(20) > h


@pytest.mark.parametrize("s", [2, 3])
def test_rate_grows_with_block_length(s):
    family = CodeFamily(2, s)
    rates = [family.rate(n) for n in range(family.min_length, 21)]
    assert rates == sorted(rates)


def test_longer_markers_lose_less_rate():
    rates = [CodeFamily(2, s).rate(20) for s in (1, 2, 3)]
    assert rates == sorted(rates)
    assert rates[0] == pytest.approx(math.log2(19) / 20)


def test_family_bounds():
    with pytest.raises(InputError):
        CodeFamily(1, 1)
    with pytest.raises(InputError):
        CodeFamily(11, 1)
    with pytest.raises(InputError):
        CodeFamily(2, 0)
    with pytest.raises(InputError):
        build_family(2, 2, 3)


def test_build_family():
    blocks, count = build_family(2, 2, 5)
    assert count == 4
    assert ["".join(b) for b in blocks] == ["10000", "10001", "10010", "10011"]
