"""Worked example diagrams, shipped both as builders and as .bd files under data/fixtures."""
import os
from typing import Callable, Dict, List, Optional, Tuple

from arrays.window import ArrayWindow
from bratteli.diagram import OrderedBratteliDiagram, Stationarity, diagram_from_edges
from bratteli.vershik import FinitePath
from core.errors import InputError
from core.settings import FIXTURES_DIR

ROOT = "v0"


def odometer() -> OrderedBratteliDiagram:
    """One vertex per level joined to the one below by two edges: the dyadic adding machine."""
    return diagram_from_edges(
        [(ROOT,), ("v",), ("v",)],
        [(1, "v", ROOT, 0), (1, "v", ROOT, 1), (2, "v", "v", 0), (2, "v", "v", 1)],
        Stationarity(1),
        "odometer",
    )


def sunny_side_up() -> OrderedBratteliDiagram:
    """Non-simple properly ordered diagram whose Vershik system is the sunny-side-up subshift."""
    return diagram_from_edges(
        [(ROOT,), ("v", "w"), ("v", "w")],
        [
            (1, "v", ROOT, 0),
            (1, "w", ROOT, 0),
            (2, "v", "v", 0),
            (2, "w", "v", 0),
            (2, "w", "w", 1),
            (2, "w", "v", 2),
        ],
        Stationarity(1),
        "example1",
    )


def three_vertex() -> OrderedBratteliDiagram:
    """Period-2 diagram: the centre vertex swaps its extremal edges between even and odd levels."""
    even = [(2, "L", "L", 0), (2, "C", "L", 0), (2, "C", "C", 1), (2, "C", "R", 2), (2, "R", "R", 0)]
    odd = [(3, "L", "L", 0), (3, "C", "R", 0), (3, "C", "C", 1), (3, "C", "L", 2), (3, "R", "R", 0)]
    return diagram_from_edges(
        [(ROOT,), ("L", "C", "R"), ("L", "C", "R"), ("L", "C", "R")],
        [(1, "L", ROOT, 0), (1, "C", ROOT, 0), (1, "R", ROOT, 0)] + even + odd,
        Stationarity(1, 2),
        "example2",
    )


def compactification() -> OrderedBratteliDiagram:
    """Vershik system conjugate to n -> n+1 on the one-point compactification of the integers >= 0."""
    return diagram_from_edges(
        [(ROOT,), ("v", "w"), ("v", "w")],
        [
            (1, "v", ROOT, 0),
            (1, "w", ROOT, 0),
            (2, "v", "v", 0),
            (2, "w", "w", 0),
            (2, "w", "v", 1),
            (2, "w", "v", 2),
        ],
        Stationarity(1),
        "example3",
    )


def skew_product() -> OrderedBratteliDiagram:
    """Two vertices with crossing edges; the extremal edges are the crossing ones."""
    return diagram_from_edges(
        [(ROOT,), ("v", "w"), ("v", "w")],
        [
            (1, "v", ROOT, 0),
            (1, "w", ROOT, 0),
            (2, "v", "v", 0),
            (2, "v", "w", 1),
            (2, "w", "v", 1),
            (2, "w", "w", 0),
        ],
        Stationarity(1),
        "skew",
    )


def medynets(depth: int = 6) -> OrderedBratteliDiagram:
    """
    Every path through u is minimal and every path through w is maximal, yet
    each of these sets holds many paths. Left descendants of u point at their
    parent with order 0 and at v with order 1; right descendants of w point at
    v with order 0 and at their parent with order 1; v keeps two parallel edges.
    """
    if depth < 1:
        raise InputError(f"depth must be positive, got {depth}")
    left, right = ["u"], ["w"]
    levels: List[Tuple[str, ...]] = [(ROOT,), ("u", "v", "w")]
    edges = [(1, "u", ROOT, 0), (1, "v", ROOT, 0), (1, "w", ROOT, 0)]
    for k in range(2, depth + 1):
        new_left = [p + c for p in left for c in "01"]
        new_right = [p + c for p in right for c in "01"]
        for child in new_left:
            edges += [(k, child, child[:-1], 0), (k, child, "v", 1)]
        edges += [(k, "v", "v", 0), (k, "v", "v", 1)]
        for child in new_right:
            edges += [(k, child, "v", 0), (k, child, child[:-1], 1)]
        left, right = new_left, new_right
        levels.append(tuple(left) + ("v",) + tuple(right))
    return diagram_from_edges(levels, edges, None, "medynets")


def mixed_widths() -> OrderedBratteliDiagram:
    """Level-1 symbols of widths 2, 3, 2, 5 and a level-2 vertex u1 reading w2 w1 w4 w1."""
    widths = {"w1": 2, "w2": 3, "w3": 2, "w4": 5}
    edges = [(1, w, ROOT, o) for w, n in widths.items() for o in range(n)]
    edges += [(2, "u1", "w2", 0), (2, "u1", "w1", 1), (2, "u1", "w4", 2), (2, "u1", "w1", 3), (2, "u2", "w3", 0)]
    return diagram_from_edges([(ROOT,), tuple(widths), ("u1", "u2")], edges, None, "figure")


FIXTURES: Dict[str, Callable[[], OrderedBratteliDiagram]] = {
    "odometer": odometer,
    "example1": sunny_side_up,
    "example2": three_vertex,
    "example3": compactification,
    "skew": skew_product,
    "medynets": medynets,
    "figure": mixed_widths,
}


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURES_DIR, f"{name}.bd")


def sunny_one_position(w: ArrayWindow) -> Optional[int]:
    """Coordinate of the single w in row 1 (the 1 of the sunny-side-up point), if any."""
    hits = [w.start + i for i, s in enumerate(w.rows[0]) if s == "w"]
    return hits[0] if hits else None


def compactification_label(p: FinitePath) -> Optional[int]:
    """
    The integer a path of the compactification diagram stands for: crossing
    from w to v at level n+1 by edge 1 gives 2n-1, by edge 2 gives 2n; staying
    on w gives 0; staying on v is the point at infinity (None).
    """
    for e in p.edges:
        if e.level >= 2 and e.source == "w" and e.target == "v":
            n = e.level - 1
            return 2 * n - 1 if e.order == 1 else 2 * n
    return 0 if p.top is not None and p.top[1] == "w" else None
