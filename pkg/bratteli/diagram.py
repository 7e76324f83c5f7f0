import logging
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from core.errors import InputError, StationarityError

Vertex = Tuple[int, str]  # (level, name)


@dataclass(frozen=True)
class Edge:
    """An edge of E_level from `source` in V_level to `target` in V_{level-1}."""

    level: int
    source: str
    target: str
    order: int
    via: Tuple[int, ...] = ()  # constituent orders, bottom-up, for telescoped edges

    @property
    def key(self) -> Tuple[int, str, int]:
        return (self.level, self.source, self.order)

    @property
    def source_vertex(self) -> Vertex:
        return (self.level, self.source)

    @property
    def target_vertex(self) -> Vertex:
        return (self.level - 1, self.target)


@dataclass(frozen=True)
class Stationarity:
    """
    Declares V_k = phi(V_{k-period}) for k >= k0 + period and
    E_k = phi(E_{k-period}) for k > k0 + period; names missing from
    `mapping` map to themselves.
    """

    k0: int
    period: int = 1
    mapping: Tuple[Tuple[str, str], ...] = ()

    def __post_init__(self) -> None:
        if self.k0 < 0 or self.period < 1:
            raise InputError(f"stationary tail needs k0 >= 0 and period >= 1, got k0={self.k0}, period={self.period}")
        object.__setattr__(self, "mapping", tuple(sorted((str(a), str(b)) for a, b in self.mapping)))

    def phi(self, name: str) -> str:
        return dict(self.mapping).get(name, name)


@dataclass
class ValidationReport:
    issues: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.issues


@dataclass(frozen=True)
class OrderedBratteliDiagram:
    """
    Levels V_0..V_K of vertex names and ordered edges; the order index of an
    edge ranks it among the outgoing edges of its source.
    """

    levels: Tuple[Tuple[str, ...], ...]
    edges: Tuple[Edge, ...]
    stationary: Optional[Stationarity] = None
    name: str = ""

    def __post_init__(self) -> None:
        levels = tuple(tuple(str(v) for v in level) for level in self.levels)
        if not levels or len(levels[0]) != 1:
            raise InputError("level 0 must hold exactly one vertex")
        for k, level in enumerate(levels):
            if len(set(level)) != len(level):
                raise InputError(f"level {k} repeats a vertex name: {list(level)}")
        names = [set(level) for level in levels]

        seen = set()
        for e in self.edges:
            if not 1 <= e.level < len(levels):
                raise InputError(f"edge {e.source}->{e.target} at level {e.level} outside 1..{len(levels) - 1}")
            if e.source not in names[e.level]:
                raise InputError(f"edge source {e.source!r} is not a level-{e.level} vertex")
            if e.target not in names[e.level - 1]:
                raise InputError(f"edge target {e.target!r} is not a level-{e.level - 1} vertex")
            if e.order < 0:
                raise InputError(f"edge {e.source}->{e.target} at level {e.level} has negative order {e.order}")
            if e.key in seen:
                raise InputError(f"two edges from {e.source!r} at level {e.level} share order {e.order}")
            seen.add(e.key)

        object.__setattr__(self, "levels", levels)
        object.__setattr__(self, "edges", tuple(sorted(self.edges, key=lambda e: e.key)))

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    @property
    def root(self) -> Vertex:
        return (0, self.levels[0][0])

    def vertices(self, k: int) -> List[Vertex]:
        return [(k, v) for v in self.levels[k]]

    def has_vertex(self, v: Vertex) -> bool:
        return 0 <= v[0] <= self.depth and v[1] in self.levels[v[0]]

    def check_vertex(self, v: Vertex) -> Vertex:
        if not self.has_vertex(v):
            raise InputError(f"no vertex {v[1]!r} at level {v[0]}")
        return v

    def edges_at(self, k: int) -> List[Edge]:
        return [e for e in self.edges if e.level == k]

    @cached_property
    def out_edges(self) -> Dict[Vertex, Tuple[Edge, ...]]:
        out: Dict[Vertex, List[Edge]] = defaultdict(list)
        for e in self.edges:
            out[e.source_vertex].append(e)
        return {v: tuple(sorted(es, key=lambda e: e.order)) for v, es in out.items()}

    @cached_property
    def in_edges(self) -> Dict[Vertex, Tuple[Edge, ...]]:
        incoming: Dict[Vertex, List[Edge]] = defaultdict(list)
        for e in self.edges:
            incoming[e.target_vertex].append(e)
        return {v: tuple(sorted(es, key=lambda e: (e.source, e.order))) for v, es in incoming.items()}

    def outgoing(self, v: Vertex) -> Tuple[Edge, ...]:
        return self.out_edges.get(v, ())

    def incoming(self, v: Vertex) -> Tuple[Edge, ...]:
        return self.in_edges.get(v, ())

    def is_max_edge(self, e: Edge) -> bool:
        return self.outgoing(e.source_vertex)[-1] == e

    def is_min_edge(self, e: Edge) -> bool:
        return self.outgoing(e.source_vertex)[0] == e

    def next_edge(self, e: Edge) -> Optional[Edge]:
        siblings = self.outgoing(e.source_vertex)
        i = siblings.index(e)
        return siblings[i + 1] if i + 1 < len(siblings) else None

    def previous_edge(self, e: Edge) -> Optional[Edge]:
        siblings = self.outgoing(e.source_vertex)
        i = siblings.index(e)
        return siblings[i - 1] if i > 0 else None

    @cached_property
    def path_counts(self) -> Dict[Vertex, int]:
        counts: Dict[Vertex, int] = {self.root: 1}
        for k in range(1, self.depth + 1):
            for v in self.vertices(k):
                counts[v] = sum(counts[e.target_vertex] for e in self.outgoing(v))
        return counts


def path_count(d: OrderedBratteliDiagram, v: Vertex) -> int:
    """Number of finite paths from v down to the root."""
    return d.path_counts[d.check_vertex(v)]


def validate(d: OrderedBratteliDiagram) -> ValidationReport:
    report = ValidationReport()
    for k in range(d.depth):
        for v in d.vertices(k):
            if not d.incoming(v):
                report.issues.append(f"level {k}: vertex {v[1]} is not the target of any level-{k + 1} edge")
    for k in range(1, d.depth + 1):
        for v in d.vertices(k):
            orders = [e.order for e in d.outgoing(v)]
            if not orders:
                report.issues.append(f"level {k}: vertex {v[1]} is not the source of any edge")
            elif orders != list(range(len(orders))):
                report.issues.append(f"level {k}: orders of {v[1]} are {orders}, expected 0..{len(orders) - 1}")
    if d.stationary is not None:
        report.issues.extend(stationarity_issues(d, d.stationary))
    logging.debug("Validated %s: %d issues", d.name or "diagram", len(report.issues))
    return report


def _edge_signature(edges: Iterable[Edge], rename: Mapping[str, str] | None = None) -> List[Tuple[str, str, int]]:
    rename = rename or {}
    return sorted((rename.get(e.source, e.source), rename.get(e.target, e.target), e.order) for e in edges)


def stationarity_issues(d: OrderedBratteliDiagram, st: Stationarity) -> List[str]:
    issues = []
    p = st.period
    if d.depth < st.k0 + p:
        issues.append(f"stationary tail needs levels up to {st.k0 + p}, diagram stops at {d.depth}")
        return issues
    for k in range(st.k0 + p, d.depth + 1):
        expected = sorted(st.phi(v) for v in d.levels[k - p])
        if sorted(d.levels[k]) != expected:
            issues.append(f"level {k} vertices {sorted(d.levels[k])} differ from phi(level {k - p}) {expected}")
    for k in range(st.k0 + p + 1, d.depth + 1):
        mapped = _edge_signature(d.edges_at(k - p), {v: st.phi(v) for v in set(d.levels[k - p]) | set(d.levels[k - p - 1])})
        if _edge_signature(d.edges_at(k)) != mapped:
            issues.append(f"level {k} edges differ from phi(level {k - p} edges)")
    return issues


def require_stationary(d: OrderedBratteliDiagram) -> Stationarity:
    if d.stationary is None:
        raise StationarityError(f"{d.name or 'diagram'} declares no stationary tail")
    issues = stationarity_issues(d, d.stationary)
    if issues:
        raise StationarityError("; ".join(issues))
    return d.stationary


def truncate(d: OrderedBratteliDiagram, depth: int) -> OrderedBratteliDiagram:
    if depth < 0:
        raise InputError(f"depth must be nonnegative, got {depth}")
    if depth >= d.depth:
        return d
    stationary = d.stationary if d.stationary and d.stationary.k0 + d.stationary.period <= depth else None
    return OrderedBratteliDiagram(
        d.levels[: depth + 1], tuple(e for e in d.edges if e.level <= depth), stationary, d.name
    )


def extend(d: OrderedBratteliDiagram, depth: int) -> OrderedBratteliDiagram:
    """Unroll the stationary tail down to `depth` levels (or truncate when shallower)."""
    if depth <= d.depth:
        return truncate(d, depth)
    st = require_stationary(d)
    p = st.period
    levels = list(d.levels)
    edges = list(d.edges)
    by_level: Dict[int, List[Edge]] = defaultdict(list)
    for e in edges:
        by_level[e.level].append(e)

    for k in range(d.depth + 1, depth + 1):
        levels.append(tuple(st.phi(v) for v in levels[k - p]))
        fresh = [Edge(k, st.phi(e.source), st.phi(e.target), e.order, e.via) for e in by_level[k - p]]
        by_level[k] = fresh
        edges.extend(fresh)
    logging.debug("Extended %s from depth %d to %d", d.name or "diagram", d.depth, depth)
    return OrderedBratteliDiagram(tuple(levels), tuple(edges), d.stationary, d.name)


def diagram_from_edges(
    levels: Sequence[Sequence[str]],
    edges: Iterable[Tuple[int, str, str, int]],
    stationary: Optional[Stationarity] = None,
    name: str = "",
) -> OrderedBratteliDiagram:
    return OrderedBratteliDiagram(
        tuple(tuple(level) for level in levels),
        tuple(Edge(k, s, t, o) for k, s, t, o in edges),
        stationary,
        name,
    )
