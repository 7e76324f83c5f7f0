import pytest

from bratteli.analysis import (
    Verdict,
    decisive_check,
    extremal_paths,
    is_simple_upto,
    telescope,
    telescope_path,
)
from bratteli.diagram import diagram_from_edges, extend, validate
from bratteli.fixtures import FIXTURES, compactification, medynets, odometer, sunny_side_up, three_vertex
from bratteli.vershik import TailPolicy, enumerate_paths, successor
from core.errors import BoundExceededError, InputError, StationarityError


def test_telescoped_odometer_edges_record_constituents():
    t = telescope(extend(odometer(), 2), [0, 2])
    assert t.depth == 1
    assert [e.via for e in t.edges] == [(0, 0), (1, 0), (0, 1), (1, 1)]
    assert validate(t).ok


@pytest.mark.parametrize("builder", [odometer, sunny_side_up, three_vertex])
def test_telescoping_commutes_with_successor(builder):
    d = extend(builder(), 4)
    keep = [0, 2, 4]
    t = telescope(d, keep)
    for v in d.vertices(4):
        for p in enumerate_paths(d, v):
            nxt = successor(d, p)
            image = telescope_path(d, keep, p)
            if nxt is None:
                assert successor(t, image) is None
            else:
                assert successor(t, image) == telescope_path(d, keep, nxt)


def test_telescope_rejects_bad_levels():
    d = extend(odometer(), 3)
    with pytest.raises(InputError):
        telescope(d, [1, 2])
    with pytest.raises(InputError):
        telescope(d, [0, 2, 2])
    with pytest.raises(InputError):
        telescope(d, [0, 5])


def test_simplicity():
    assert is_simple_upto(odometer(), 8).simple
    assert is_simple_upto(odometer(), 8).witness[:3] == (0, 1, 2)
    assert not is_simple_upto(three_vertex(), 8).simple
    assert not is_simple_upto(sunny_side_up(), 8).simple
    with pytest.raises(InputError):
        is_simple_upto(odometer(), 1)


def test_extremal_paths_of_compactification():
    d = compactification()
    assert len(extremal_paths(d, 4, "max", TailPolicy.STATIONARY)) == 1
    minimal = extremal_paths(d, 4, "min", TailPolicy.STATIONARY)
    assert sorted(p.top[1] for p in minimal) == ["v", "w"]
    with pytest.raises(InputError):
        extremal_paths(d, 4, "middle")
    with pytest.raises(InputError):
        extremal_paths(d, 9)


@pytest.mark.parametrize("depth", range(2, 11))
def test_odometer_is_decisive_at_every_depth(depth):
    verdict = decisive_check(odometer(), depth, TailPolicy.STATIONARY)
    assert verdict.status is Verdict.DECISIVE_EVIDENCE
    assert verdict.witness is None


@pytest.mark.parametrize("name", ["odometer", "example1", "example2"])
def test_properly_ordered_examples_are_decisive(name):
    verdict = decisive_check(FIXTURES[name](), 8, TailPolicy.STATIONARY)
    assert verdict.status is Verdict.DECISIVE_EVIDENCE
    assert verdict.witness is None
    assert verdict.notes


def test_skew_product_is_not_continuous():
    verdict = decisive_check(FIXTURES["skew"](), 8, TailPolicy.STATIONARY)
    assert verdict.status is Verdict.NON_DECISIVE
    assert verdict.witness.kind == "continuity"
    assert verdict.witness.image_divergence == 1
    assert verdict.witness.divergence > 1


def test_compactification_has_unequal_extremal_counts():
    verdict = decisive_check(compactification(), 8, TailPolicy.STATIONARY)
    assert verdict.status is Verdict.NON_DECISIVE
    assert verdict.witness.kind == "count"
    assert verdict.witness.detail == "1 maximal, 2 minimal"


def test_medynets_has_extremal_sets_with_interior():
    verdict = decisive_check(medynets(8), 8, TailPolicy.TRUNCATE)
    assert verdict.status is Verdict.NON_DECISIVE
    assert verdict.witness.kind == "interior"
    assert verdict.witness.vertex == "u"
    assert verdict.witness.depth == 1


def test_truncated_diagram_without_interior_is_inconclusive():
    verdict = decisive_check(extend(odometer(), 6), 6, TailPolicy.TRUNCATE)
    assert verdict.status is Verdict.INCONCLUSIVE


def test_decisive_check_limits(monkeypatch):
    with pytest.raises(InputError):
        decisive_check(odometer(), 1, TailPolicy.STATIONARY)
    monkeypatch.setenv("ZDYN_MAX_DEPTH", "6")
    with pytest.raises(BoundExceededError):
        decisive_check(odometer(), 7, TailPolicy.STATIONARY)
    with pytest.raises(StationarityError):
        decisive_check(medynets(4), 4, TailPolicy.STATIONARY)


def test_continuity_witness_reports_the_level_where_images_split(monkeypatch):
    # T and U both pass through p first; their next children q and r share the child a
    d = diagram_from_edges(
        [("v0",), ("a",), ("p", "q", "r"), ("T", "U")],
        [
            (1, "a", "v0", 0),
            (1, "a", "v0", 1),
            (2, "p", "a", 0),
            (2, "q", "a", 0),
            (2, "r", "a", 0),
            (3, "T", "p", 0),
            (3, "T", "q", 1),
            (3, "U", "p", 0),
            (3, "U", "r", 1),
        ],
    )
    assert decisive_check(d, 3, TailPolicy.TRUNCATE).witness is None

    monkeypatch.setattr("bratteli.analysis.analysis_setting", lambda key, settings=None: 2)
    verdict = decisive_check(d, 3, TailPolicy.TRUNCATE)
    assert verdict.status is Verdict.INCONCLUSIVE
    assert verdict.witness.kind == "continuity"
    assert verdict.witness.vertex == "a"
    assert verdict.witness.image_divergence == 2
    assert verdict.witness.detail == "successor images of paths through a@1 differ at level 2"


def test_continuity_detail_matches_image_divergence():
    w = decisive_check(FIXTURES["skew"](), 8, TailPolicy.STATIONARY).witness
    assert w.detail.endswith(f"differ at level {w.image_divergence}")
