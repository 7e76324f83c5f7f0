"""
Finite paths and the Vershik successor.

Paths run from a top vertex at level k down to the root and are stored
bottom-up: edges[0] is e_1 (ending at the root), edges[-1] is e_k. Paths from
the same top vertex are compared inverse-lexicographically: the highest edge
where they differ decides.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, List, Optional, Sequence, Tuple

from bratteli.diagram import Edge, OrderedBratteliDiagram, Vertex, extend
from core.errors import InputError
from core.settings import get_limits


class TailPolicy(str, Enum):
    TRUNCATE = "truncate"
    STATIONARY = "stationary"


@dataclass(frozen=True)
class FinitePath:
    edges: Tuple[Edge, ...]

    def __post_init__(self) -> None:
        edges = tuple(self.edges)
        for i, e in enumerate(edges, start=1):
            if e.level != i:
                raise InputError(f"edge {i} of a path must sit at level {i}, got level {e.level}")
        for lower, upper in zip(edges, edges[1:]):
            if upper.target != lower.source:
                raise InputError(
                    f"path breaks at level {upper.level}: {upper.source}->{upper.target} does not end at {lower.source}"
                )
        object.__setattr__(self, "edges", edges)

    @property
    def depth(self) -> int:
        return len(self.edges)

    @property
    def top(self) -> Optional[Vertex]:
        if not self.edges:
            return None
        e = self.edges[-1]
        return (e.level, e.source)

    @property
    def orders(self) -> Tuple[int, ...]:
        return tuple(e.order for e in self.edges)

    def prefix(self, depth: int) -> "FinitePath":
        return FinitePath(self.edges[:depth])

    def vertex_at(self, level: int) -> str:
        """Name of the vertex the path visits at `level`."""
        if level == 0:
            return self.edges[0].target
        return self.edges[level - 1].source

    def describe(self) -> str:
        if not self.edges:
            return "(empty)"
        top = self.top
        return f"{top[1]}@{top[0]} [" + " ".join(str(o) for o in self.orders) + "]"


def _chain(d: OrderedBratteliDiagram, v: Vertex, pick_last: bool) -> Tuple[Edge, ...]:
    d.check_vertex(v)
    down: List[Edge] = []
    current = v
    while current[0] > 0:
        out = d.outgoing(current)
        if not out:
            raise InputError(f"vertex {current[1]} at level {current[0]} has no outgoing edges")
        e = out[-1] if pick_last else out[0]
        down.append(e)
        current = e.target_vertex
    return tuple(reversed(down))


def min_path(d: OrderedBratteliDiagram, v: Vertex) -> FinitePath:
    return FinitePath(_chain(d, v, pick_last=False))


def max_path(d: OrderedBratteliDiagram, v: Vertex) -> FinitePath:
    return FinitePath(_chain(d, v, pick_last=True))


def path_from_orders(d: OrderedBratteliDiagram, top: str, orders: Sequence[int]) -> FinitePath:
    """Build the path from the named level-len(orders) vertex; orders are given bottom-up (e_1 first)."""
    k = len(orders)
    current: Vertex = d.check_vertex((k, top))
    down: List[Edge] = []
    for order in reversed(orders):
        match = [e for e in d.outgoing(current) if e.order == order]
        if not match:
            raise InputError(f"vertex {current[1]} at level {current[0]} has no edge of order {order}")
        down.append(match[0])
        current = match[0].target_vertex
    return FinitePath(tuple(reversed(down)))


def enumerate_paths(d: OrderedBratteliDiagram, v: Vertex) -> Iterator[FinitePath]:
    """All paths from v to the root in increasing inverse-lexicographic order."""
    d.check_vertex(v)

    def walk(current: Vertex) -> Iterator[Tuple[Edge, ...]]:
        if current[0] == 0:
            yield ()
            return
        for e in d.outgoing(current):
            for below in walk(e.target_vertex):
                yield below + (e,)

    for edges in walk(v):
        yield FinitePath(edges)


def path_rank(d: OrderedBratteliDiagram, p: FinitePath) -> int:
    """1-based position of p among the paths from its top vertex."""
    rank = 1
    for e in p.edges:
        for sibling in d.outgoing(e.source_vertex):
            if sibling.order >= e.order:
                break
            rank += d.path_counts[sibling.target_vertex]
    return rank


def is_maximal(d: OrderedBratteliDiagram, p: FinitePath) -> bool:
    return all(d.is_max_edge(e) for e in p.edges)


def is_minimal(d: OrderedBratteliDiagram, p: FinitePath) -> bool:
    return all(d.is_min_edge(e) for e in p.edges)


def successor(d: OrderedBratteliDiagram, p: FinitePath) -> Optional[FinitePath]:
    """Next path in order, or None when every edge is maximal."""
    for i, e in enumerate(p.edges):
        nxt = d.next_edge(e)
        if nxt is None:
            continue
        below = min_path(d, nxt.target_vertex).edges
        return FinitePath(below + (nxt,) + p.edges[i + 1 :])
    return None


def predecessor(d: OrderedBratteliDiagram, p: FinitePath) -> Optional[FinitePath]:
    """Previous path in order, or None when every edge is minimal."""
    for i, e in enumerate(p.edges):
        prev = d.previous_edge(e)
        if prev is None:
            continue
        below = max_path(d, prev.target_vertex).edges
        return FinitePath(below + (prev,) + p.edges[i + 1 :])
    return None


@dataclass
class Orbit:
    paths: List[FinitePath] = field(default_factory=list)
    stopped: bool = False  # ran into a maximal path the tail policy could not extend
    diagram: Optional[OrderedBratteliDiagram] = None


def _extend_upward(d: OrderedBratteliDiagram, p: FinitePath) -> Tuple[OrderedBratteliDiagram, Optional[FinitePath]]:
    """Grow a maximal path upward until an edge above it has a successor."""
    limit = get_limits().max_extension
    current = p
    for _ in range(limit):
        if current.depth + 1 > d.depth:
            d = extend(d, current.depth + 1)
        incoming = d.incoming(current.top)
        if not incoming:
            return d, None
        open_edges = [e for e in incoming if not d.is_max_edge(e)]
        current = FinitePath(current.edges + ((open_edges or incoming)[0],))
        if open_edges:
            return d, current
    logging.warning("Gave up extending a maximal path after %d levels", limit)
    return d, None


def vershik_orbit(d: OrderedBratteliDiagram, p: FinitePath, steps: int, tail: TailPolicy) -> Orbit:
    """Iterate the successor; under a stationary tail a maximal path is first lifted to a level where it is not."""
    if steps < 0:
        raise InputError(f"steps must be nonnegative, got {steps}")
    orbit = Orbit(paths=[p], diagram=d)
    current = p
    for _ in range(steps):
        nxt = successor(d, current)
        if nxt is None and TailPolicy(tail) is TailPolicy.STATIONARY:
            d, lifted = _extend_upward(d, current)
            nxt = successor(d, lifted) if lifted is not None else None
        if nxt is None:
            orbit.stopped = True
            break
        orbit.paths.append(nxt)
        current = nxt
    orbit.diagram = d
    return orbit
