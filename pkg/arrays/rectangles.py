import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from arrays.markers import MarkerProfile
from arrays.window import ArrayWindow, Row, format_window, restrict_window, shift_window
from core.errors import BoundExceededError, EmptyCountsError, InputError, NoMarkersError
from core.settings import get_limits


@dataclass(frozen=True)
class KRectangle:
    """
    Rows 1..k between two consecutive row-k markers, stored as a window over
    columns 0..width-1; the left delimiter is the marker at -1, the right end
    the marker at width-1.
    """

    depth: int
    window: ArrayWindow

    def __post_init__(self) -> None:
        if self.window.depth != self.depth:
            raise InputError(f"{self.depth}-rectangle carries {self.window.depth} rows")
        if self.window.start != 0 or self.window.width < 1:
            raise InputError("rectangle windows start at column 0 and are nonempty")
        top = self.window.row_markers(self.depth)
        if top != (-1, self.window.width - 1):
            raise InputError(f"row {self.depth} of a rectangle must be marked exactly at both ends, got {list(top)}")

    @property
    def width(self) -> int:
        return self.window.width

    @property
    def rows(self) -> Tuple[Row, ...]:
        return self.window.rows

    def sort_key(self) -> tuple:
        return (self.width, self.window.rows, self.window.markers)

    def label(self) -> str:
        """Compact one-line rendering, rows joined by '/'."""
        lines = format_window(self.window).splitlines()[1:]
        return " / ".join(line.replace(" ", "") for line in lines)


def extract_rectangles(w: ArrayWindow, k: int) -> List[KRectangle]:
    """k-rectangles of the window in positional order; truncated fragments at both edges are skipped."""
    if not 1 <= k <= w.depth:
        raise InputError(f"depth {k} outside 1..{w.depth}")
    marks = w.row_markers(k)
    if len(marks) < 2:
        raise NoMarkersError(f"row {k} needs at least two markers to delimit a rectangle, found {len(marks)}")

    top = w.top(k)
    out = []
    for left, right in zip(marks, marks[1:]):
        piece = restrict_window(top, left + 1, right)
        out.append(KRectangle(k, shift_window(piece, left + 1)))
    return out


def concatenate_rectangles(rects: Sequence[KRectangle], start: int = 0) -> ArrayWindow:
    """Lay rectangles side by side; inverse of extract_rectangles between the first and last row-k marker."""
    if not rects:
        raise InputError("nothing to concatenate")
    depth = rects[0].depth
    if any(r.depth != depth for r in rects):
        raise InputError("rectangles of mixed depth cannot be concatenated")

    rows: List[List[str]] = [[] for _ in range(depth)]
    markers: List[set] = [set() for _ in range(depth)]
    offset = start
    for r in rects:
        for k in range(depth):
            rows[k].extend(r.rows[k])
            markers[k].update(p + offset for p in r.window.markers[k])
        offset += r.width
    return ArrayWindow(
        tuple(tuple(row) for row in rows),
        tuple(tuple(sorted(m)) for m in markers),
        start,
        offset - start,
    )


def rectangle_multiset(rects: Iterable[KRectangle]) -> Counter:
    return Counter(rects)


def distinct_rectangles(rects: Iterable[KRectangle]) -> List[KRectangle]:
    return sorted(set(rects), key=KRectangle.sort_key)


def count_by_length(rects: Iterable[KRectangle]) -> Dict[int, int]:
    """Number of distinct rectangles per width."""
    counts: Dict[int, int] = Counter(r.width for r in set(rects))
    return dict(sorted(counts.items()))


def entropy_from_rectangles(counts: Mapping[int, int], profile: Optional[MarkerProfile], k: int) -> float:
    """max over represented lengths n of log2(#R^n_k) / n."""
    present = {int(n): int(c) for n, c in counts.items() if c > 0}
    if not present:
        raise EmptyCountsError(f"no {k}-rectangles counted")
    if profile is not None and k <= profile.depth:
        lo, hi = profile.bounds(k)
        outside = sorted(n for n in present if not lo <= n <= hi)
        if outside:
            raise InputError(f"rectangle lengths {outside} fall outside [{lo}, {hi}] for row {k}")
    return max(math.log2(c) / n for n, c in present.items())


def free_block_count(k: int) -> int:
    """1 + sum_j (|Lambda_j|^{n_j} - 1) * 2^{k-j} with n_j = 2^j and Lambda_j = {0..j}."""
    if k < 1:
        raise InputError(f"depth must be positive, got {k}")
    return 1 + sum(((j + 1) ** (2**j) - 1) * 2 ** (k - j) for j in range(1, k + 1))


def free_block_profile(k: int) -> MarkerProfile:
    return MarkerProfile(tuple(2**j for j in range(1, k + 1)), tuple(2**j for j in range(1, k + 1)))


def free_block_rectangles(k: int) -> List[KRectangle]:
    """
    The k-rectangles of the free-block array system: row j is cut into blocks
    of width 2^j over symbols {0..j}, and at most one block in the whole
    rectangle is non-zero, carrying an arbitrary word.
    """
    total = free_block_count(k)
    bound = get_limits().dp_bound
    if total > bound:
        raise BoundExceededError(f"free-block system at depth {k} has {total} rectangles, above dp_bound={bound}")

    width = 2**k
    markers = tuple(tuple(range(-1, width, 2**j)) for j in range(1, k + 1))
    zero_rows = [["0"] * width for _ in range(k)]

    def build(rows: List[List[str]]) -> KRectangle:
        return KRectangle(k, ArrayWindow(tuple(tuple(r) for r in rows), markers, 0, width))

    out = [build(zero_rows)]
    for j in range(1, k + 1):
        block = 2**j
        symbols = [str(s) for s in range(j + 1)]
        for slot in range(width // block):
            for word in itertools.product(symbols, repeat=block):
                if all(s == "0" for s in word):
                    continue
                rows = [list(r) for r in zero_rows]
                rows[j - 1][slot * block : (slot + 1) * block] = word
                out.append(build(rows))
    logging.info("Free-block system at depth %d: %d rectangles", k, len(out))
    return out
