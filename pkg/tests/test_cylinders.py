import pytest

from arrays.cylinders import (
    block_cylinder,
    difference,
    format_cylinder,
    is_subset,
    marker_rectangles,
    marker_window,
    neighborhood,
    occurrences,
    parse_cylinder,
    rectangle_length_counts,
    refine,
    union,
)
from core.errors import InputError, RadiusOverflowError


def test_block_cylinder_radius_and_patterns(golden):
    c = block_cylinder(golden, ("1",), 0)
    assert c.radius == 0
    assert c.patterns == {("1",)}
    shifted = block_cylinder(golden, ("1", "0"), -2)
    assert shifted.radius == 2
    assert all(p[0:2] == ("1", "0") for p in shifted.patterns)


def test_refine_keeps_admissible_extensions(golden):
    c = refine(golden, block_cylinder(golden, ("1",), 0), 1)
    assert c.patterns == {("0", "1", "0")}
    with pytest.raises(InputError):
        refine(golden, c, 0)


def test_set_operations(full2):
    ones = parse_cylinder(full2, "1")
    zeros = parse_cylinder(full2, "0")
    everything = union(full2, ones, zeros)
    assert everything.size == 1 and len(everything.patterns) == 2
    assert difference(full2, everything, ones) == zeros
    assert is_subset(full2, ones, everything)
    assert not is_subset(full2, everything, ones)


def test_parse_and_format(golden):
    c = parse_cylinder(golden, "10@-1")
    assert c.radius == 1
    assert format_cylinder(golden, c) == "radius 1: 100 101"


def test_neighborhood(golden):
    near = neighborhood(golden, parse_cylinder(golden, "1"), 1)
    assert near.radius == 1
    assert ("0", "0", "0") not in near.patterns
    assert ("0", "1", "0") in near.patterns
    assert ("1", "0", "0") in near.patterns


def test_radius_cap(golden):
    with pytest.raises(RadiusOverflowError):
        block_cylinder(golden, ("1",), 7)


def test_radius_cap_follows_environment(golden, monkeypatch):
    monkeypatch.setenv("ZDYN_MAX_RADIUS", "2")
    with pytest.raises(RadiusOverflowError):
        block_cylinder(golden, ("1",), 3)


def test_marker_window_puts_markers_left_of_visits(golden):
    f = parse_cylinder(golden, "1")
    w = marker_window(golden, f, tuple("0100100"))
    assert occurrences(f, tuple("0100100")) == [1, 4]
    assert w.row_markers(1) == (0, 3)


def test_marker_window_rejects_inadmissible_words(golden):
    with pytest.raises(InputError):
        marker_window(golden, parse_cylinder(golden, "1"), tuple("0110"))


def test_golden_mean_marker_rectangles(golden):
    f = block_cylinder(golden, tuple("1000"), 0)
    assert rectangle_length_counts(golden, f, 8) == {4: 1, 5: 1, 6: 2, 7: 3, 8: 4}
    rects = marker_rectangles(golden, f, 8)
    assert ["".join(r.rows[0]) for r in rects[6]] == ["100000", "100010"]
