import pytest

from arrays.window import overlap_agrees, shift_window
from bratteli.diagram import extend, path_count, truncate
from bratteli.fixtures import mixed_widths, sunny_one_position, sunny_side_up
from bratteli.symbols import k_symbol, path_to_array
from bratteli.vershik import FinitePath, enumerate_paths, path_from_orders, successor


def _shallow(d, depth):
    return extend(d, depth) if d.stationary else truncate(d, depth)


def test_symbol_widths_match_path_counts(fixture_diagram):
    d = _shallow(fixture_diagram, 6)
    for k in range(1, d.depth + 1):
        for v in d.vertices(k):
            symbol = k_symbol(d, v)
            assert symbol.width == path_count(d, v)
            assert symbol.depth == k
            assert symbol.row_markers(k) == (-1, symbol.width - 1)


def test_mixed_width_symbol():
    symbol = k_symbol(mixed_widths(), (2, "u1"))
    assert symbol.width == 12
    assert "".join(s[-1] for s in symbol.rows[0]) == "222114444411"
    assert symbol.row_markers(1) == (-1, 2, 4, 9, 11)
    assert set(symbol.rows[1]) == {"u1"}


def test_root_symbol_is_one_empty_column():
    d = sunny_side_up()
    symbol = path_to_array(d, FinitePath(()))
    assert symbol.width == 1
    assert symbol.depth == 0


def test_successor_is_conjugate_to_the_shift(fixture_diagram):
    d = _shallow(fixture_diagram, 5)
    for k in range(1, d.depth + 1):
        for v in d.vertices(k):
            for p in enumerate_paths(d, v):
                nxt = successor(d, p)
                if nxt is None:
                    continue
                shifted = shift_window(path_to_array(d, p), 1)
                image = path_to_array(d, nxt)
                assert overlap_agrees(image, shifted)
                assert image == shifted


@pytest.mark.parametrize("depth", range(2, 9))
def test_sunny_side_up_places_the_one(depth):
    d = extend(sunny_side_up(), depth)
    through_w = path_from_orders(d, "w", [0] + [1] * (depth - 1))
    assert sunny_one_position(path_to_array(d, through_w)) == 0
    for n in range(1, depth):
        for order, expected in ((0, n), (2, -n)):
            orders = [0] * n + [order] + [1] * (depth - n - 1)
            p = path_from_orders(d, "w", orders)
            assert sunny_one_position(path_to_array(d, p)) == expected


def test_paths_through_v_see_no_one():
    d = extend(sunny_side_up(), 4)
    p = path_from_orders(d, "v", [0, 0, 0, 0])
    assert sunny_one_position(path_to_array(d, p)) is None
