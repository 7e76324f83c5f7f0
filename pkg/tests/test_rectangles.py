import math

import pytest

from arrays.markers import MarkerProfile
from arrays.rectangles import (
    KRectangle,
    concatenate_rectangles,
    count_by_length,
    distinct_rectangles,
    entropy_from_rectangles,
    extract_rectangles,
    free_block_count,
    free_block_profile,
    free_block_rectangles,
    rectangle_multiset,
)
from arrays.window import single_row
from core.errors import EmptyCountsError, InputError, NoMarkersError


def test_extract_row_one(dyadic):
    rects = extract_rectangles(dyadic, 1)
    assert ["".join(r.rows[0]) for r in rects] == ["01", "00", "10", "00"]
    assert rectangle_multiset(rects)[rects[1]] == 2
    assert len(distinct_rectangles(rects)) == 3
    assert count_by_length(rects) == {2: 3}


def test_extract_row_two_keeps_lower_markers(dyadic):
    first, second = extract_rectangles(dyadic, 2)
    assert first.width == 4
    assert first.window.row_markers(1) == (-1, 1, 3)
    assert second.window.row_markers(1) == (-1, 1, 3)
    assert second.rows[0] == ("1", "0", "0", "0")


def test_concatenation_inverts_extraction(dyadic):
    assert concatenate_rectangles(extract_rectangles(dyadic, 2)) == dyadic


def test_truncated_fragments_are_skipped():
    rects = extract_rectangles(single_row("abcde", [0, 2]), 1)
    assert [r.rows[0] for r in rects] == [("b", "c")]


def test_extract_needs_two_markers():
    with pytest.raises(NoMarkersError):
        extract_rectangles(single_row("abc", [0]), 1)


def test_rectangle_must_be_delimited():
    with pytest.raises(InputError):
        KRectangle(1, single_row("ab", [0]))


def test_label_is_compact():
    assert KRectangle(1, single_row("ab", [-1, 1])).label() == "|ab|"


def test_entropy_from_rectangle_counts():
    counts = {4: 1, 5: 1, 6: 2, 7: 3, 8: 4}
    assert entropy_from_rectangles(counts, None, 1) == pytest.approx(math.log2(4) / 8)


def test_entropy_needs_counts():
    with pytest.raises(EmptyCountsError):
        entropy_from_rectangles({}, None, 1)
    with pytest.raises(EmptyCountsError):
        entropy_from_rectangles({3: 0}, None, 1)


def test_entropy_rejects_lengths_outside_the_profile():
    with pytest.raises(InputError):
        entropy_from_rectangles({2: 1, 9: 3}, MarkerProfile((2,), (4,)), 1)


def test_free_block_counts():
    assert free_block_count(1) == 4
    assert free_block_count(2) == 87


def test_free_block_rectangles_exceed_the_lower_bound():
    rects = free_block_rectangles(2)
    assert len(rects) == len(set(rects)) == 87
    assert len(rects) >= 2 ** (2**2)
    assert {r.width for r in rects} == {4}


@pytest.mark.parametrize("k,total", [(1, 4), (2, 87)])
def test_free_block_entropy_within_the_dyadic_profile(k, total):
    profile = free_block_profile(k)
    assert profile.bounds(k) == (2**k, 2**k)
    counts = count_by_length(free_block_rectangles(k))
    assert counts == {2**k: total}
    assert entropy_from_rectangles(counts, profile, k) == pytest.approx(math.log2(total) / 2**k)
