from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from core.errors import MalformedWindowError, ParseError

Row = Tuple[str, ...]
MARKER = "|"


@dataclass(frozen=True)
class ArrayWindow:
    """
    A finite K-row array over columns [start, start + width - 1].

    markers[k-1] holds the row-k marker positions; a marker at position p sits
    between columns p and p + 1, so positions range over [start - 1, end].
    """

    rows: Tuple[Row, ...]
    markers: Tuple[Tuple[int, ...], ...]
    start: int = 0
    width: Optional[int] = None

    def __post_init__(self) -> None:
        rows = tuple(tuple(str(s) for s in r) for r in self.rows)
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise MalformedWindowError(f"ragged rows with widths {sorted(widths)}")
        width = self.width if self.width is not None else (widths.pop() if widths else 0)
        if rows and len(rows[0]) != width:
            raise MalformedWindowError(f"rows have width {len(rows[0])}, declared {width}")
        if width < 0:
            raise MalformedWindowError(f"negative width {width}")
        if len(self.markers) != len(rows):
            raise MalformedWindowError(f"{len(rows)} rows but {len(self.markers)} marker rows")
        markers = []
        for k, row_markers in enumerate(self.markers, start=1):
            ordered = tuple(int(p) for p in row_markers)
            if any(b <= a for a, b in zip(ordered, ordered[1:])):
                raise MalformedWindowError(f"row {k} markers are not strictly increasing: {list(ordered)}")
            if ordered and (ordered[0] < self.start - 1 or ordered[-1] > self.start + width - 1):
                raise MalformedWindowError(f"row {k} markers {list(ordered)} leave the window")
            markers.append(ordered)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "markers", tuple(markers))
        object.__setattr__(self, "width", width)

    @property
    def depth(self) -> int:
        return len(self.rows)

    @property
    def end(self) -> int:
        return self.start + self.width - 1

    def symbol(self, k: int, column: int) -> str:
        return self.rows[k - 1][column - self.start]

    def row_markers(self, k: int) -> Tuple[int, ...]:
        return self.markers[k - 1]

    def with_markers(self, k: int, positions: Sequence[int]) -> "ArrayWindow":
        markers = list(self.markers)
        markers[k - 1] = tuple(sorted(set(positions)))
        return ArrayWindow(self.rows, tuple(markers), self.start, self.width)

    def top(self, k: int) -> "ArrayWindow":
        """Rows 1..k only."""
        return ArrayWindow(self.rows[:k], self.markers[:k], self.start, self.width)


def shift_window(w: ArrayWindow, steps: int = 1) -> ArrayWindow:
    """Horizontal left shift by `steps` columns: content at coordinate i moves to i - steps."""
    markers = tuple(tuple(p - steps for p in row) for row in w.markers)
    return ArrayWindow(w.rows, markers, w.start - steps, w.width)


def restrict_window(w: ArrayWindow, a: int, b: int) -> ArrayWindow:
    a, b = max(a, w.start), min(b, w.end)
    if a > b:
        return ArrayWindow(tuple(() for _ in w.rows), tuple(() for _ in w.rows), a, 0)
    rows = tuple(r[a - w.start : b - w.start + 1] for r in w.rows)
    markers = tuple(tuple(p for p in row if a - 1 <= p <= b) for row in w.markers)
    return ArrayWindow(rows, markers, a, b - a + 1)


def overlap_agrees(first: ArrayWindow, second: ArrayWindow) -> bool:
    """True when both windows show the same symbols and markers on their common rows and columns."""
    a, b = max(first.start, second.start), min(first.end, second.end)
    depth = min(first.depth, second.depth)
    if a > b:
        return True
    left = restrict_window(first.top(depth), a, b)
    right = restrict_window(second.top(depth), a, b)
    return left == right


def format_window(w: ArrayWindow) -> str:
    lines = [f"ROWS {w.depth} {w.start} {w.end}"]
    for k in range(1, w.depth + 1):
        marks = set(w.row_markers(k))
        tokens: List[str] = []
        if w.start - 1 in marks:
            tokens.append(MARKER)
        for i, symbol in enumerate(w.rows[k - 1]):
            tokens.append(symbol)
            if w.start + i in marks:
                tokens.append(MARKER)
        lines.append(" ".join(tokens))
    return "\n".join(lines) + "\n"


def parse_window(text: str, source: Optional[str] = None) -> ArrayWindow:
    lines = [(n, l.strip()) for n, l in enumerate(text.splitlines(), start=1)]
    lines = [(n, l) for n, l in lines if l and not l.startswith("#")]
    if not lines:
        raise ParseError("empty array file", None, source)
    header_no, header = lines[0]
    parts = header.split()
    if len(parts) != 4 or parts[0].upper() != "ROWS":
        raise ParseError("expected header 'ROWS K a b'", header_no, source)
    try:
        depth, a, b = int(parts[1]), int(parts[2]), int(parts[3])
    except ValueError:
        raise ParseError("ROWS header needs integers", header_no, source)
    body = lines[1:]
    if len(body) != depth:
        raise ParseError(f"header declares {depth} rows, found {len(body)}", header_no, source)

    width = b - a + 1
    rows, markers = [], []
    for lineno, line in body:
        row: List[str] = []
        row_markers: List[int] = []
        for token in line.split():
            if token == MARKER:
                row_markers.append(a - 1 + len(row))
            else:
                row.append(token)
        if len(row) != width:
            raise ParseError(f"row has {len(row)} symbols, expected {width}", lineno, source)
        rows.append(tuple(row))
        markers.append(tuple(row_markers))
    try:
        return ArrayWindow(tuple(rows), tuple(markers), a, width)
    except MalformedWindowError as exc:
        raise ParseError(str(exc), None, source) from exc


def load_window(path: Path | str) -> ArrayWindow:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Array file not found: {path}")
    return parse_window(path.read_text(), source=str(path))


def single_row(symbols: Sequence[str], markers: Sequence[int], start: int = 0) -> ArrayWindow:
    return ArrayWindow((tuple(symbols),), (tuple(markers),), start, len(symbols))
