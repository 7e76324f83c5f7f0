import pytest

from bratteli.diagram import extend
from bratteli.fixtures import compactification, compactification_label, odometer
from bratteli.vershik import (
    FinitePath,
    TailPolicy,
    enumerate_paths,
    is_maximal,
    is_minimal,
    max_path,
    min_path,
    path_from_orders,
    path_rank,
    predecessor,
    successor,
    vershik_orbit,
)
from core.errors import InputError


@pytest.mark.parametrize("k", range(1, 11))
def test_odometer_orbit_visits_every_path_once(k):
    d = extend(odometer(), k)
    top = (k, "v")
    expected = list(enumerate_paths(d, top))
    seen = []
    p = min_path(d, top)
    while p is not None:
        seen.append(p)
        p = successor(d, p)
    assert len(seen) == 2**k
    assert seen == expected
    assert [path_rank(d, q) for q in seen[:5]] == list(range(1, min(5, 2**k) + 1))


def test_odometer_successor_adds_one_with_carry():
    d = extend(odometer(), 4)
    p = path_from_orders(d, "v", [1, 1, 0, 1])
    assert successor(d, p).orders == (0, 0, 1, 1)
    assert path_rank(d, successor(d, p)) == path_rank(d, p) + 1


def test_successor_and_predecessor_are_inverse(fixture_diagram):
    d = extend(fixture_diagram, 4) if fixture_diagram.stationary else fixture_diagram
    k = min(4, d.depth)
    for v in d.vertices(k):
        for p in enumerate_paths(d, v):
            nxt = successor(d, p)
            if nxt is None:
                assert is_maximal(d, p)
                continue
            assert predecessor(d, nxt) == p
            assert path_rank(d, nxt) == path_rank(d, p) + 1


def test_extremal_paths_have_no_neighbours():
    d = extend(odometer(), 3)
    assert successor(d, max_path(d, (3, "v"))) is None
    assert predecessor(d, min_path(d, (3, "v"))) is None
    assert is_minimal(d, min_path(d, (3, "v")))


def test_path_must_chain():
    d = extend(odometer(), 2)
    e1, e2 = d.edges_at(1)[0], d.edges_at(2)[0]
    with pytest.raises(InputError):
        FinitePath((e2, e1))


def test_path_from_orders_rejects_missing_edge():
    with pytest.raises(InputError):
        path_from_orders(odometer(), "v", [0, 2])


def test_truncated_orbit_stops_at_maximal_path():
    d = extend(odometer(), 3)
    orbit = vershik_orbit(d, max_path(d, (3, "v")), 5, TailPolicy.TRUNCATE)
    assert orbit.stopped
    assert len(orbit.paths) == 1


def test_stationary_orbit_lifts_maximal_path():
    d = extend(odometer(), 2)
    orbit = vershik_orbit(d, max_path(d, (2, "v")), 1, TailPolicy.STATIONARY)
    assert not orbit.stopped
    assert orbit.paths[1].orders == (0, 0, 1)
    assert orbit.diagram.depth == 3


def test_compactification_orbit_counts_upward():
    d = extend(compactification(), 8)
    start = min_path(d, (8, "w"))
    truncated = vershik_orbit(d, start, 20, TailPolicy.TRUNCATE)
    assert [compactification_label(p) for p in truncated.paths] == list(range(15))
    assert truncated.stopped

    lifted = vershik_orbit(d, start, 20, TailPolicy.STATIONARY)
    assert [compactification_label(p) for p in lifted.paths] == list(range(21))
    assert not lifted.stopped


def test_point_at_infinity_is_fixed():
    d = extend(compactification(), 5)
    p = min_path(d, (5, "v"))
    assert compactification_label(p) is None
    assert successor(d, p) is None


def test_negative_steps_are_rejected():
    d = odometer()
    with pytest.raises(InputError):
        vershik_orbit(d, min_path(d, (2, "v")), -1, TailPolicy.TRUNCATE)
