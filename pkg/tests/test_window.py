import pytest

from arrays.window import (
    ArrayWindow,
    format_window,
    overlap_agrees,
    parse_window,
    restrict_window,
    shift_window,
    single_row,
)
from core.errors import MalformedWindowError, ParseError


def test_fixture_window_shape(dyadic):
    assert dyadic.depth == 2
    assert (dyadic.start, dyadic.end, dyadic.width) == (0, 7, 8)
    assert dyadic.row_markers(1) == (-1, 1, 3, 5, 7)
    assert dyadic.row_markers(2) == (-1, 3, 7)
    assert dyadic.symbol(1, 4) == "1"


def test_format_and_parse_round_trip(dyadic):
    assert parse_window(format_window(dyadic)) == dyadic


def test_format_places_markers_between_columns():
    w = single_row("abab", [-1, 1, 3])
    assert format_window(w) == "ROWS 1 0 3\n| a b | a b |\n"


def test_shift_moves_content_left(dyadic):
    shifted = shift_window(dyadic, 1)
    assert shifted.start == -1
    assert shifted.row_markers(1) == (-2, 0, 2, 4, 6)
    assert shifted.symbol(1, 3) == dyadic.symbol(1, 4)


def test_restrict_keeps_markers_inside(dyadic):
    piece = restrict_window(dyadic, 2, 5)
    assert piece.rows[0] == ("0", "0", "1", "0")
    assert piece.row_markers(1) == (1, 3, 5)
    assert piece.row_markers(2) == (3,)


def test_restrict_outside_is_empty(dyadic):
    assert restrict_window(dyadic, 10, 12).width == 0


def test_overlap_agrees(dyadic):
    assert overlap_agrees(dyadic, restrict_window(dyadic, 3, 6))
    assert not overlap_agrees(dyadic, shift_window(dyadic, 1))
    assert overlap_agrees(dyadic, shift_window(dyadic, 20))


def test_ragged_rows_are_rejected():
    with pytest.raises(MalformedWindowError):
        ArrayWindow((("a", "b"), ("a",)), ((), ()))


def test_markers_must_stay_in_the_window():
    with pytest.raises(MalformedWindowError):
        single_row("ab", [-2])
    with pytest.raises(MalformedWindowError):
        single_row("ab", [1, 0])


def test_parse_checks_row_count_and_width():
    with pytest.raises(ParseError):
        parse_window("ROWS 2 0 1\n| a b |\n")
    with pytest.raises(ParseError) as excinfo:
        parse_window("ROWS 1 0 2\n| a b |\n")
    assert excinfo.value.line == 2
