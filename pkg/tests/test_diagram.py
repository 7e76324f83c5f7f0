import pytest

from bratteli.diagram import (
    Edge,
    OrderedBratteliDiagram,
    Stationarity,
    diagram_from_edges,
    extend,
    path_count,
    require_stationary,
    stationarity_issues,
    truncate,
    validate,
)
from bratteli.dot import emit_dot
from bratteli.fixtures import FIXTURES, fixture_path, medynets, mixed_widths, odometer, three_vertex
from bratteli.parser import load_diagram, parse_diagram, serialize_diagram
from core.errors import InputError, ParseError, StationarityError


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_fixture_files_match_builders(name):
    expected = medynets(4) if name == "medynets" else FIXTURES[name]()
    assert load_diagram(fixture_path(name)) == expected


def test_serialize_round_trip(fixture_diagram):
    assert parse_diagram(serialize_diagram(fixture_diagram)) == fixture_diagram


def test_fixtures_are_valid(fixture_diagram):
    report = validate(fixture_diagram)
    assert report.ok, report.issues


def test_validate_reports_gaps_in_orders():
    d = diagram_from_edges([("v0",), ("a", "b"), ("c",)], [(1, "a", "v0", 0), (1, "b", "v0", 1), (2, "c", "a", 0)])
    issues = validate(d).issues
    assert any("orders of b" in i for i in issues)
    assert any("vertex b is not the target" in i for i in issues)


def test_construction_rejects_bad_edges():
    with pytest.raises(InputError):
        diagram_from_edges([("v0",), ("a",)], [(1, "a", "x", 0)])
    with pytest.raises(InputError):
        diagram_from_edges([("v0",), ("a",)], [(1, "a", "v0", 0), (1, "a", "v0", 0)])
    with pytest.raises(InputError):
        OrderedBratteliDiagram((("r", "s"),), ())


def test_path_counts():
    d = extend(odometer(), 5)
    assert [path_count(d, (k, "v")) for k in range(1, 6)] == [2, 4, 8, 16, 32]
    assert path_count(mixed_widths(), (2, "u1")) == 12


def test_extend_unrolls_period_two():
    d = extend(three_vertex(), 5)
    assert d.depth == 5
    assert validate(d).ok
    odd = sorted((e.source, e.target, e.order) for e in d.edges_at(5))
    assert odd == sorted((e.source, e.target, e.order) for e in d.edges_at(3))
    assert ("C", "R", 0) in odd


def test_truncate_keeps_prefix():
    d = truncate(extend(odometer(), 6), 3)
    assert d.depth == 3
    assert len(d.edges) == 6


def test_stationarity_is_checked():
    d = OrderedBratteliDiagram(odometer().levels, odometer().edges, Stationarity(1, 1, (("v", "x"),)), "bad")
    assert stationarity_issues(d, d.stationary)
    with pytest.raises(StationarityError):
        require_stationary(d)
    with pytest.raises(StationarityError):
        extend(mixed_widths(), 4)


def test_parse_stationary_mapping():
    text = "LEVEL 0 r\nLEVEL 1 a\nLEVEL 2 b\nEDGE 1 a r 0\nEDGE 2 b a 0\nSTATIONARY 1 a->b b->a\n"
    d = parse_diagram(text)
    assert d.stationary == Stationarity(1, 1, (("a", "b"), ("b", "a")))
    assert d.edges[0] == Edge(1, "a", "r", 0)


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as excinfo:
        parse_diagram("LEVEL 0 r\nLEVEL 1 a\nEDGE 1 a r zero\n")
    assert excinfo.value.line == 3
    with pytest.raises(ParseError):
        parse_diagram("LEVEL 0 r\nLEVEL 2 a\n")


def test_dot_has_one_rank_per_level():
    source = emit_dot(extend(odometer(), 3))
    assert source.count("rank=same") == 4
    assert source.count("->") == 6
    assert source.count("label=0") == 3
    assert source.count("label=1") == 3


def test_dot_of_sunny_side_up_has_triple_bundle():
    source = emit_dot(FIXTURES["example1"]())
    assert source.count("L1_w -> L2_w") == 1
    assert source.count("L1_v -> L2_w") == 2
