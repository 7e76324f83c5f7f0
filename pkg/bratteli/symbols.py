from typing import Dict, List

from arrays.window import ArrayWindow, shift_window
from bratteli.diagram import OrderedBratteliDiagram, Vertex
from bratteli.vershik import FinitePath, path_rank


def _build_symbol(d: OrderedBratteliDiagram, v: Vertex, memo: Dict[Vertex, ArrayWindow]) -> ArrayWindow:
    if v in memo:
        return memo[v]
    k, name = v
    if k == 0:
        symbol = ArrayWindow((), (), 0, 1)
    else:
        parts = [_build_symbol(d, e.target_vertex, memo) for e in d.outgoing(v)]
        width = sum(p.width for p in parts)
        rows: List[List[str]] = [[] for _ in range(k - 1)]
        markers: List[List[int]] = [[] for _ in range(k - 1)]
        offset = 0
        for part in parts:
            for j in range(k - 1):
                rows[j].extend(part.rows[j])
                markers[j].extend(p + offset for p in part.markers[j])
            offset += part.width
        rows.append([name] * width)
        markers.append([-1, width - 1])
        symbol = ArrayWindow(
            tuple(tuple(r) for r in rows),
            tuple(tuple(sorted(set(m))) for m in markers),
            0,
            width,
        )
    memo[v] = symbol
    return symbol


def k_symbol(d: OrderedBratteliDiagram, v: Vertex) -> ArrayWindow:
    """
    The k-symbol of a level-k vertex over columns 0..width-1: rows 1..k-1 are
    the symbols of the edge targets laid out in edge order, row k repeats the
    vertex name between a left delimiter and a marker at the right end. The
    root's symbol has width 1 and no rows.
    """
    d.check_vertex(v)
    return _build_symbol(d, v, {})


def path_to_array(d: OrderedBratteliDiagram, p: FinitePath) -> ArrayWindow:
    """The k-symbol of the path's top vertex, placed so the path's column (1-based rank) sits at 0."""
    if p.depth == 0:
        return k_symbol(d, d.root)
    return shift_window(k_symbol(d, p.top), path_rank(d, p) - 1)
