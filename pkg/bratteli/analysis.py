import logging
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

import numpy as np

from bratteli.diagram import Edge, OrderedBratteliDiagram, Vertex, extend, require_stationary, truncate
from bratteli.vershik import FinitePath, TailPolicy, max_path, min_path
from core.errors import BoundExceededError, InputError
from core.settings import analysis_setting, get_limits


# ---------------------------------------------------------------- telescoping


def _partial_paths(d: OrderedBratteliDiagram, v: Vertex, stop: int) -> Iterator[Tuple[Edge, ...]]:
    """Edge chains from v down to level `stop`, bottom-up, in inverse-lexicographic order."""
    if v[0] == stop:
        yield ()
        return
    for e in d.outgoing(v):
        for below in _partial_paths(d, e.target_vertex, stop):
            yield below + (e,)


def telescope(d: OrderedBratteliDiagram, keep: Sequence[int]) -> OrderedBratteliDiagram:
    """Collapse onto the kept levels; composite paths become edges, ordered inverse-lexicographically."""
    keep = list(keep)
    if len(keep) < 2 or keep[0] != 0:
        raise InputError(f"kept levels must start at 0 and hold at least two levels, got {keep}")
    if any(b <= a for a, b in zip(keep, keep[1:])) or keep[-1] > d.depth:
        raise InputError(f"kept levels must increase within 0..{d.depth}, got {keep}")

    edges: List[Edge] = []
    for j in range(1, len(keep)):
        for v in d.vertices(keep[j]):
            for order, chain in enumerate(_partial_paths(d, v, keep[j - 1])):
                edges.append(Edge(j, v[1], chain[0].target, order, tuple(e.order for e in chain)))
    logging.info("Telescoped %s onto levels %s: %d edges", d.name or "diagram", keep, len(edges))
    return OrderedBratteliDiagram(tuple(d.levels[k] for k in keep), tuple(edges), None, d.name)


def telescope_path(d: OrderedBratteliDiagram, keep: Sequence[int], p: FinitePath) -> FinitePath:
    """Image of a path ending at a kept level under the telescoping bijection."""
    keep = list(keep)
    if p.depth not in keep:
        raise InputError(f"path depth {p.depth} is not a kept level of {keep}")
    t = telescope(d, keep[: keep.index(p.depth) + 1])
    lookup = {(e.level, e.source, e.via): e for e in t.edges}
    out = []
    for j in range(1, keep.index(p.depth) + 1):
        chain = p.edges[keep[j - 1] : keep[j]]
        out.append(lookup[(j, chain[-1].source, tuple(e.order for e in chain))])
    return FinitePath(tuple(out))


# ----------------------------------------------------------------- simplicity


@dataclass
class SimplicityResult:
    simple: bool
    witness: Tuple[int, ...]
    depth: int


def _adjacency(d: OrderedBratteliDiagram, k: int) -> np.ndarray:
    """Counts of edges from V_k (rows) to V_{k-1} (columns)."""
    rows = {v: i for i, v in enumerate(d.levels[k])}
    cols = {v: i for i, v in enumerate(d.levels[k - 1])}
    m = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for e in d.edges_at(k):
        m[rows[e.source], cols[e.target]] += 1
    return m


def _connected(d: OrderedBratteliDiagram, upper: int, lower: int) -> bool:
    """Every vertex of V_upper reaches every vertex of V_lower."""
    reach = np.eye(len(d.levels[upper]), dtype=bool)
    for k in range(upper, lower, -1):
        reach = (reach.astype(np.int64) @ _adjacency(d, k)) > 0
    return bool(reach.all())


def is_simple_upto(d: OrderedBratteliDiagram, depth: int) -> SimplicityResult:
    """
    Simple up to `depth` when every level j <= depth // 2 is fully reached from
    some deeper level within the truncation; the witness is the greedy
    telescoping 0 = l_0 < l_1 < ... with full connection between neighbours.
    """
    if depth < 2:
        raise InputError(f"simplicity needs depth >= 2, got {depth}")
    if depth > d.depth:
        d = extend(d, depth) if d.stationary is not None else d
        depth = min(depth, d.depth)

    def first_full(j: int) -> Optional[int]:
        return next((l for l in range(j + 1, depth + 1) if _connected(d, l, j)), None)

    simple = all(first_full(j) is not None for j in range(0, depth // 2 + 1))
    chain = [0]
    while True:
        nxt = first_full(chain[-1])
        if nxt is None:
            break
        chain.append(nxt)
    return SimplicityResult(simple=simple, witness=tuple(chain), depth=depth)


# ------------------------------------------------------------- extremal paths


def _extremal_vertices(d: OrderedBratteliDiagram, depth: int, maximal: bool) -> List[Vertex]:
    """Level-`depth` vertices whose extremal path prolongs all the way to the bottom level of d."""
    current: Set[Vertex] = set(d.vertices(d.depth))
    for k in range(d.depth, depth, -1):
        nxt = set()
        for v in current:
            out = d.outgoing(v)
            if out:
                nxt.add((out[-1] if maximal else out[0]).target_vertex)
        current = nxt
    return sorted(current)


def _horizon(d: OrderedBratteliDiagram, depth: int) -> OrderedBratteliDiagram:
    st = require_stationary(d)
    width = max(len(level) for level in d.levels)
    return extend(d, depth + width * st.period + 1)


def extremal_paths(
    d: OrderedBratteliDiagram, depth: int, kind: str = "max", tail: TailPolicy = TailPolicy.TRUNCATE
) -> List[FinitePath]:
    """Depth-`depth` prefixes of extremal paths: every edge maximal (kind='max') or minimal (kind='min')."""
    if kind not in ("max", "min"):
        raise InputError(f"kind must be 'max' or 'min', got {kind!r}")
    if depth < 1:
        raise InputError(f"depth must be positive, got {depth}")
    if TailPolicy(tail) is TailPolicy.STATIONARY:
        d = _horizon(d, depth)
    elif depth > d.depth:
        raise InputError(f"depth {depth} exceeds the truncation depth {d.depth}")
    chooser = max_path if kind == "max" else min_path
    return [chooser(d, v) for v in _extremal_vertices(d, depth, kind == "max")]


# --------------------------------------------------------------- decisiveness


class Verdict(str, Enum):
    DECISIVE_EVIDENCE = "decisive-evidence"
    NON_DECISIVE = "non-decisive"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Witness:
    kind: str  # count | continuity | interior | isolated
    depth: int
    detail: str
    vertex: Optional[str] = None
    paths: Tuple[FinitePath, ...] = ()
    divergence: Optional[int] = None  # first edge index where the witness paths differ
    image_divergence: Optional[int] = None  # first edge index where their images differ


@dataclass
class DecisivenessVerdict:
    """Non-decisive verdicts are conclusive; decisive-evidence only reports that no witness was found."""

    status: Verdict
    witness: Optional[Witness] = None
    depth: int = 0
    notes: List[str] = field(default_factory=list)


def _count_witness(d: OrderedBratteliDiagram, depth: int) -> Optional[Witness]:
    counts = [
        (len(_extremal_vertices(d, m, True)), len(_extremal_vertices(d, m, False))) for m in range(1, depth + 1)
    ]
    tail = counts[-3:]
    if len(set(tail)) == 1 and tail[0][0] != tail[0][1]:
        maxi, mini = tail[0]
        return Witness(
            kind="count",
            depth=depth,
            detail=f"{maxi} maximal, {mini} minimal",
        )
    return None


def _divergence(a: FinitePath, b: FinitePath) -> int:
    for i, (x, y) in enumerate(zip(a.edges, b.edges), start=1):
        if x != y:
            return i
    return min(a.depth, b.depth) + 1


def _continuity_witness(d: OrderedBratteliDiagram, depth: int, maximal: bool) -> Optional[Witness]:
    """
    Paths whose edges are extremal below level i and not at level i converge to
    the extremal path through their common prefix; compare where the Vershik map
    (or its inverse) sends them for every such level i under the deepest prefix.
    """
    image_depth = int(analysis_setting("image_depth"))
    m = depth - 2
    if m < 1:
        return None
    pick = (lambda out: out[-1]) if maximal else (lambda out: out[0])
    refill = min_path if maximal else max_path

    for x in _extremal_vertices(d, m, maximal):
        images: Dict[Tuple[Edge, ...], FinitePath] = {}
        # vertices whose extremal chain passes through x
        above: Set[Vertex] = {x}
        for i in range(m + 1, depth + 1):
            for z in sorted(above):
                if z[0] != i - 1:
                    continue
                for e in d.incoming(z):
                    sibling = d.next_edge(e) if maximal else d.previous_edge(e)
                    if sibling is None:
                        continue
                    lower = (max_path if maximal else min_path)(d, z).edges
                    y = FinitePath(lower + (e,))
                    image = refill(d, sibling.target_vertex).edges[:image_depth]
                    images.setdefault(image, y)
            above = {v for v in d.vertices(i) if d.outgoing(v) and pick(d.outgoing(v)).target_vertex in above}
        if len(images) >= 2:
            (img_a, y), (img_b, z) = list(images.items())[:2]
            side = "successor" if maximal else "predecessor"
            level = _divergence(FinitePath(img_a), FinitePath(img_b))
            return Witness(
                kind="continuity",
                depth=m,
                detail=f"{side} images of paths through {x[1]}@{x[0]} differ at level {level}",
                vertex=x[1],
                paths=(y, z),
                divergence=_divergence(y, z),
                image_divergence=level,
            )
    return None


def _upward_counts(d: OrderedBratteliDiagram, depth: int, maximal: Optional[bool]) -> Dict[Vertex, int]:
    """Number of upward edge chains from each vertex to level `depth`; restricted to extremal edges when asked."""
    counts: Dict[Vertex, int] = {v: 1 for v in d.vertices(depth)}
    for k in range(depth, 0, -1):
        below: Dict[Vertex, int] = defaultdict(int)
        for v in d.vertices(k):
            out = d.outgoing(v)
            if not out:
                continue
            chosen = out if maximal is None else [out[-1] if maximal else out[0]]
            for e in chosen:
                below[e.target_vertex] += counts.get(v, 0)
        counts.update(below)
    return counts


def _interior_witnesses(d: OrderedBratteliDiagram, depth: int) -> List[Witness]:
    found: List[Witness] = []
    isolated: Dict[bool, List[Vertex]] = {True: [], False: []}
    everything = _upward_counts(d, depth, None)
    for maximal in (True, False):
        extremal = _upward_counts(d, depth, maximal)
        name = "maximal" if maximal else "minimal"
        for m in range(1, depth - 1):
            for x in _extremal_vertices(d, m, maximal):
                total, inside = everything.get(x, 0), extremal.get(x, 0)
                if total != inside:
                    continue
                if inside >= 2:
                    chooser = max_path if maximal else min_path
                    found.append(
                        Witness(
                            kind="interior",
                            depth=m,
                            detail=f"every path through {x[1]}@{m} is {name} ({inside} prolongations)",
                            vertex=x[1],
                            paths=(chooser(d, x),),
                        )
                    )
                elif inside == 1:
                    isolated[maximal].append(x)
    for m in range(1, depth - 1):
        on_max = [x for x in isolated[True] if x[0] == m]
        on_min = [x for x in isolated[False] if x[0] == m]
        if len(on_max) != len(on_min):
            vertex = sorted(on_max + on_min)[0]
            found.append(
                Witness(
                    kind="isolated",
                    depth=m,
                    detail=f"{len(on_max)} isolated maximal vs {len(on_min)} isolated minimal points",
                    vertex=vertex[1],
                )
            )
    return sorted(found, key=lambda w: (w.depth, w.vertex or "", w.kind))


def decisive_check(d: OrderedBratteliDiagram, depth: int, tail: TailPolicy) -> DecisivenessVerdict:
    """
    Finite-depth decisiveness analysis: extremal path counts, continuity of
    the Vershik map at extremal points, and extremal sets with interior.
    """
    if depth < 2:
        raise InputError(f"decisiveness needs depth >= 2, got {depth}")
    cap = get_limits().max_depth
    if depth > cap:
        raise BoundExceededError(f"depth {depth} exceeds limits.max_depth={cap}")

    stationary = TailPolicy(tail) is TailPolicy.STATIONARY
    if stationary:
        work = _horizon(d, depth)
    else:
        if depth > d.depth:
            logging.info("Truncated diagram has depth %d; analysing at that depth", d.depth)
            depth = d.depth
        work = truncate(d, depth)

    analysed = truncate(work, depth)
    count = _count_witness(work, depth)
    continuity = _continuity_witness(work, depth, True) or _continuity_witness(work, depth, False)
    interior = _interior_witnesses(analysed, depth)

    notes = ["positive verdicts are evidence at finite depth, not proof"]
    if stationary:
        for witness in (count, continuity, interior[0] if interior else None):
            if witness is not None:
                return DecisivenessVerdict(Verdict.NON_DECISIVE, witness, depth, notes)
        return DecisivenessVerdict(Verdict.DECISIVE_EVIDENCE, None, depth, notes)

    notes.append("no stationary tail: only interior witnesses are conclusive")
    if interior:
        return DecisivenessVerdict(Verdict.NON_DECISIVE, interior[0], depth, notes)
    return DecisivenessVerdict(Verdict.INCONCLUSIVE, count or continuity, depth, notes)
