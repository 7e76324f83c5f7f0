"""
Diagrams built from rectangles of an array system.

A k-trapezoid is a k-rectangle widened in rows 1..k-1: on each side, row
level j gets one j-rectangle flanking the wider part above it. The vertices
of level k are k-trapezoids and every (k+1)-trapezoid points at the
k-trapezoids sitting inside its central rectangle, in left-to-right order.
"""
import itertools
import logging
import os
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

from arrays.rectangles import KRectangle, extract_rectangles
from arrays.window import ArrayWindow, Row
from bratteli.diagram import Edge, OrderedBratteliDiagram, Vertex
from core.errors import AdjacencyError, InputError, NoMarkersError
from core.settings import FIXTURES_DIR
from symbolic.language import is_admissible, language
from symbolic.parser import load_subshift
from symbolic.subshift import SubshiftSpec

Adjacency = Mapping[int, Set[Tuple[KRectangle, KRectangle]]]
ROOT = "v0"


@dataclass(frozen=True)
class Trapezoid:
    center: KRectangle
    left: Tuple[KRectangle, ...] = ()  # flanks of depth k-1 down to 1
    right: Tuple[KRectangle, ...] = ()

    @property
    def depth(self) -> int:
        return self.center.depth

    def sort_key(self) -> tuple:
        return (
            self.center.sort_key(),
            tuple(r.sort_key() for r in self.left),
            tuple(r.sort_key() for r in self.right),
        )

    def describe(self) -> str:
        left = " ".join(r.label() for r in reversed(self.left))
        right = " ".join(r.label() for r in self.right)
        return f"[{left}] {self.center.label()} [{right}]".strip()


@dataclass
class TrapezoidResult:
    diagram: OrderedBratteliDiagram
    naive: OrderedBratteliDiagram
    labels: Dict[Vertex, str] = field(default_factory=dict)
    naive_labels: Dict[Vertex, str] = field(default_factory=dict)


def split(rect: KRectangle, depth: int) -> List[KRectangle]:
    """Cut a rectangle into the depth-`depth` rectangles between its row-`depth` markers."""
    marks = rect.window.row_markers(depth)
    if not marks or marks[0] != -1 or marks[-1] != rect.width - 1:
        raise AdjacencyError(f"row {depth} of {rect.label()} is not marked at both ends")
    try:
        return extract_rectangles(rect.window, depth)
    except NoMarkersError as exc:
        raise AdjacencyError(f"{rect.label()} does not decompose: {exc}") from exc


def _check_input(rects: Mapping[int, Sequence[KRectangle]], adjacency: Adjacency, depth: int) -> None:
    for k in range(1, depth + 1):
        members = set(rects.get(k, ()))
        if not members:
            raise AdjacencyError(f"no {k}-rectangles given")
        pairs = adjacency.get(k, set())
        for a, b in pairs:
            if a not in members or b not in members:
                raise AdjacencyError(f"adjacency at depth {k} mentions an unknown rectangle")
        lefts = {b for _, b in pairs}
        rights = {a for a, _ in pairs}
        for r in sorted(members, key=KRectangle.sort_key):
            if r not in lefts:
                raise AdjacencyError(f"{k}-rectangle {r.label()} has no left neighbour")
            if r not in rights:
                raise AdjacencyError(f"{k}-rectangle {r.label()} has no right neighbour")
            if k > 1:
                for piece in split(r, k - 1):
                    if piece not in set(rects[k - 1]):
                        raise AdjacencyError(f"{k}-rectangle {r.label()} contains unknown piece {piece.label()}")


def _flank_chains(rect: KRectangle, adjacency: Adjacency, leftward: bool) -> List[Tuple[KRectangle, ...]]:
    """All flank sequences (depth k-1 down to 1) next to a k-rectangle."""
    k = rect.depth
    if k == 1:
        return [()]
    pairs = adjacency[k]
    neighbours = [a for a, b in pairs if b == rect] if leftward else [b for a, b in pairs if a == rect]
    chains: Set[Tuple[KRectangle, ...]] = set()
    for n in neighbours:
        pieces = split(n, k - 1)
        flank = pieces[-1] if leftward else pieces[0]
        for rest in _flank_chains(flank, adjacency, leftward):
            chains.add((flank,) + rest)
    return sorted(chains, key=lambda c: tuple(r.sort_key() for r in c))


def _layers(t: Trapezoid) -> Dict[int, List[Tuple[int, KRectangle]]]:
    """Per row level j, the j-rectangles of the trapezoid with their starting columns."""
    k = t.depth
    layers = {k: [(0, t.center)]}
    for j in range(k - 1, 0, -1):
        inner: List[Tuple[int, KRectangle]] = []
        for start, rect in layers[j + 1]:
            offset = start
            for piece in split(rect, j):
                inner.append((offset, piece))
                offset += piece.width
        left = t.left[k - 1 - j]
        right = t.right[k - 1 - j]
        first = inner[0][0]
        last_end = inner[-1][0] + inner[-1][1].width
        layers[j] = [(first - left.width, left)] + inner + [(last_end, right)]
    return layers


def _left_of(layer: List[Tuple[int, KRectangle]], column: int) -> KRectangle:
    for start, rect in layer:
        if start + rect.width == column:
            return rect
    raise AdjacencyError(f"no rectangle ends just left of column {column}")


def _right_of(layer: List[Tuple[int, KRectangle]], column: int) -> KRectangle:
    for start, rect in layer:
        if start == column:
            return rect
    raise AdjacencyError(f"no rectangle starts at column {column}")


def internal_trapezoids(t: Trapezoid) -> List[Trapezoid]:
    """The (k-1)-trapezoids around each piece of the central rectangle, left to right."""
    k = t.depth
    if k < 2:
        return []
    layers = _layers(t)
    out = []
    offset = 0
    for piece in split(t.center, k - 1):
        left, right = [], []
        lcol, rcol = offset, offset + piece.width
        for j in range(k - 2, 0, -1):
            lrect = _left_of(layers[j], lcol)
            rrect = _right_of(layers[j], rcol)
            left.append(lrect)
            right.append(rrect)
            lcol -= lrect.width
            rcol += rrect.width
        out.append(Trapezoid(piece, tuple(left), tuple(right)))
        offset += piece.width
    return out


def trapezoid_rows(t: Trapezoid) -> Tuple[Row, ...]:
    """Row j of the trapezoid read across every j-rectangle it holds; row 1 is the widest."""
    layers = _layers(t)
    return tuple(
        tuple(symbol for _, rect in layers[j] for symbol in rect.rows[j - 1]) for j in range(1, t.depth + 1)
    )


def rows_admissible(spec: SubshiftSpec) -> Callable[[Trapezoid], bool]:
    """Keep the trapezoids whose rows are all admissible words of `spec`."""

    def check(t: Trapezoid) -> bool:
        return all(is_admissible(spec, row) for row in trapezoid_rows(t))

    return check


def _assemble(
    top: Iterable,
    children,
    width,
    describe,
    sort_key,
    depth: int,
    name: str,
    prefix: str,
) -> Tuple[OrderedBratteliDiagram, Dict[Vertex, str]]:
    """Generic level-by-level builder shared by the trapezoid and naive diagrams."""
    by_level: Dict[int, List] = {depth: sorted(set(top), key=sort_key)}
    for k in range(depth, 1, -1):
        below = {c for node in by_level[k] for c in children(node)}
        by_level[k - 1] = sorted(below, key=sort_key)

    names: Dict[int, Dict] = {k: {node: f"{prefix}{k}_{i}" for i, node in enumerate(nodes)} for k, nodes in by_level.items()}
    edges: List[Edge] = []
    labels: Dict[Vertex, str] = {}
    for k in range(1, depth + 1):
        for node in by_level[k]:
            source = names[k][node]
            labels[(k, source)] = describe(node)
            if k == 1:
                edges.extend(Edge(1, source, ROOT, o) for o in range(width(node)))
            else:
                edges.extend(Edge(k, source, names[k - 1][c], o) for o, c in enumerate(children(node)))
    levels = [(ROOT,)] + [tuple(names[k][n] for n in by_level[k]) for k in range(1, depth + 1)]
    return OrderedBratteliDiagram(tuple(levels), tuple(edges), None, name), labels


def trapezoid_diagram(
    rects: Mapping[int, Sequence[KRectangle]],
    adjacency: Adjacency,
    depth: int,
    admissible: Optional[Callable[[Trapezoid], bool]] = None,
) -> TrapezoidResult:
    """
    Flanks are chosen pairwise from `adjacency`, so a flanked context can be
    one no point of the system shows; `admissible` drops those before the
    lower levels are derived from what remains.
    """
    if depth < 1:
        raise InputError(f"depth must be positive, got {depth}")
    _check_input(rects, adjacency, depth)

    top: List[Trapezoid] = []
    candidates = 0
    for x in sorted(set(rects[depth]), key=KRectangle.sort_key):
        for left, right in itertools.product(_flank_chains(x, adjacency, True), _flank_chains(x, adjacency, False)):
            candidates += 1
            t = Trapezoid(x, left, right)
            if admissible is None or admissible(t):
                top.append(t)
    if not top:
        raise AdjacencyError(f"none of the {candidates} flanked {depth}-rectangles is admissible")
    logging.info(
        "Built %d of %d candidate %d-trapezoids from %d rectangles",
        len(top),
        candidates,
        depth,
        len(set(rects[depth])),
    )

    diagram, labels = _assemble(
        top,
        internal_trapezoids,
        lambda t: t.center.width,
        Trapezoid.describe,
        Trapezoid.sort_key,
        depth,
        "trapezoids",
        "t",
    )
    naive, naive_labels = _assemble(
        rects[depth],
        lambda r: split(r, r.depth - 1) if r.depth > 1 else [],
        lambda r: r.width,
        KRectangle.label,
        KRectangle.sort_key,
        depth,
        "rectangles",
        "r",
    )
    return TrapezoidResult(diagram, naive, labels, naive_labels)


def adjacency_from_windows(windows: Iterable[ArrayWindow], depth: int) -> Tuple[Dict[int, List[KRectangle]], Dict[int, Set]]:
    """Rectangles and neighbour pairs observed in sample windows."""
    rects: Dict[int, Set[KRectangle]] = {k: set() for k in range(1, depth + 1)}
    adjacency: Dict[int, Set] = {k: set() for k in range(1, depth + 1)}
    for w in windows:
        for k in range(1, depth + 1):
            found = extract_rectangles(w, k)
            rects[k].update(found)
            adjacency[k].update(zip(found, found[1:]))
    return {k: sorted(v, key=KRectangle.sort_key) for k, v in rects.items()}, adjacency


def sunny_subshift() -> SubshiftSpec:
    return load_subshift(os.path.join(FIXTURES_DIR, "sunny.sub"))


def sunny_rectangles(
    depth: int, spec: Optional[SubshiftSpec] = None
) -> Tuple[Dict[int, List[KRectangle]], Dict[int, Set]]:
    """
    Rectangles of the sunny-side-up array system with dyadic markers: a
    k-rectangle has width 2^k, row 1 is an admissible word of the subshift
    and higher rows are zero. Two rectangles may touch when their rows read
    together stay admissible.
    """
    if depth < 1:
        raise InputError(f"depth must be positive, got {depth}")
    spec = spec or sunny_subshift()
    zero = spec.alphabet.symbols[0]
    rects: Dict[int, List[KRectangle]] = {}
    adjacency: Dict[int, Set] = {}
    for k in range(1, depth + 1):
        width = 2**k
        markers = tuple(tuple(range(-1, width, 2**j)) for j in range(1, k + 1))
        members = [
            KRectangle(k, ArrayWindow((row1,) + ((zero,) * width,) * (k - 1), markers, 0, width))
            for row1 in language(spec, width)
        ]
        rects[k] = members
        adjacency[k] = {
            (a, b)
            for a in members
            for b in members
            if all(is_admissible(spec, ra + rb) for ra, rb in zip(a.rows, b.rows))
        }
    return rects, adjacency
