"""
Array codec onto the countable alphabet {1, 2, ..., *}.

Rows are unloaded one after another into a single labelled row: row 1
rectangles are written at their first column, each later k-rectangle at the
first slot its lower rows left empty. Gaps that at least double from row to
row keep a free slot in every sector for the next row.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from arrays.markers import MarkerProfile, validate_markers
from arrays.rectangles import KRectangle, concatenate_rectangles, extract_rectangles
from arrays.window import ArrayWindow
from core.errors import InputError, LabelCollisionError, NoMarkersError, ParseError, SpacingError

INFINITY = "*"
Labelled = List[Optional[int]]


def _label_order(r: KRectangle) -> tuple:
    return (r.width, r.depth, r.rows, r.window.markers)


@dataclass(frozen=True)
class CountableLabeling:
    """Rectangles numbered 1, 2, ... non-decreasingly in width."""

    rectangles: Tuple[KRectangle, ...]

    def __post_init__(self) -> None:
        ordered = tuple(sorted(set(self.rectangles), key=_label_order))
        object.__setattr__(self, "rectangles", ordered)

    @classmethod
    def from_windows(cls, windows: Iterable[ArrayWindow], depth: Optional[int] = None) -> "CountableLabeling":
        found = set()
        for w in windows:
            for k in range(1, (depth or w.depth) + 1):
                try:
                    found.update(extract_rectangles(w, k))
                except NoMarkersError:
                    continue
        return cls(tuple(found))

    @cached_property
    def _labels(self) -> Dict[KRectangle, int]:
        return {r: i for i, r in enumerate(self.rectangles, start=1)}

    def label_of(self, rect: KRectangle) -> int:
        try:
            return self._labels[rect]
        except KeyError:
            raise InputError(f"rectangle {rect.label()} has no label") from None

    def rectangle(self, label: int) -> KRectangle:
        if not 1 <= label <= len(self.rectangles):
            raise LabelCollisionError(f"label {label} is not assigned")
        return self.rectangles[label - 1]

    def __len__(self) -> int:
        return len(self.rectangles)


def check_spacing(profile: MarkerProfile, depth: int) -> None:
    if profile.depth < depth:
        raise SpacingError(f"profile covers {profile.depth} rows, window has {depth}")
    if profile.minimums[0] < 2:
        raise SpacingError(f"row 1 minimum gap {profile.minimums[0]} is below 2")
    for k in range(1, depth):
        lo = profile.minimums[k]
        needed = 2 * profile.maximums[k - 1]
        if lo < needed:
            raise SpacingError(f"row {k + 1} minimum gap {lo} is below twice the row {k} maximum ({needed})")


def _check_window(w: ArrayWindow, profile: MarkerProfile) -> None:
    check_spacing(profile, w.depth)
    for k in range(1, w.depth + 1):
        marks = w.row_markers(k)
        if not marks or marks[0] != w.start - 1 or marks[-1] != w.end:
            raise SpacingError(f"row {k} must be marked at both window edges")
    report = validate_markers(w, profile)
    for issue in report.of_kind("nesting") + report.of_kind("gap"):
        raise SpacingError(issue.detail)


def _first_empty(slots: Labelled, lo: int, hi: int) -> Optional[int]:
    for i in range(lo, hi):
        if slots[i] is None:
            return i
    return None


def encode_countable(w: ArrayWindow, profile: MarkerProfile, labeling: CountableLabeling) -> Labelled:
    """One label per column; None stands for the symbol *."""
    if w.width == 0:
        return []
    _check_window(w, profile)

    slots: Labelled = [None] * w.width
    for k in range(1, w.depth + 1):
        marks = w.row_markers(k)
        for (left, right), rect in zip(zip(marks, marks[1:]), extract_rectangles(w, k)):
            lo, hi = left + 1 - w.start, right + 1 - w.start
            slot = _first_empty(slots, lo, hi)
            if slot is None:
                raise SpacingError(f"no free slot for the {k}-rectangle after marker {left}")
            slots[slot] = labeling.label_of(rect)
        if k < w.depth:
            for left, right in zip(marks, marks[1:]):
                if _first_empty(slots, left + 1 - w.start, right + 1 - w.start) is None:
                    raise SpacingError(f"row {k} sector after marker {left} has no free slot left")
    logging.debug("Encoded %d columns, %d labels", w.width, sum(s is not None for s in slots))
    return slots


def decode_countable(seq: Sequence[Optional[int]], labeling: CountableLabeling, start: int = 0) -> ArrayWindow:
    """Unload row 1, then each higher row from the slots the lower rows left free."""
    if not seq:
        return ArrayWindow((), (), start, 0)
    used = [False] * len(seq)
    previous: Optional[ArrayWindow] = None
    k = 0
    while True:
        k += 1
        rects: List[KRectangle] = []
        pos = 0
        while pos < len(seq):
            slot = next((i for i in range(pos, len(seq)) if not used[i]), None)
            if slot is None or seq[slot] is None:
                raise LabelCollisionError(f"no row {k} label for the rectangle starting at column {start + pos}")
            rect = labeling.rectangle(seq[slot])
            if rect.depth != k:
                raise LabelCollisionError(
                    f"label {seq[slot]} at column {start + slot} is a {rect.depth}-rectangle, expected row {k}"
                )
            if pos + rect.width > len(seq):
                raise LabelCollisionError(f"{k}-rectangle at column {start + pos} runs past the sequence")
            used[slot] = True
            rects.append(rect)
            pos += rect.width
        current = concatenate_rectangles(rects, start)
        if previous is not None and current.top(k - 1) != previous:
            raise LabelCollisionError(f"row {k} rectangles disagree with the rows decoded below them")
        previous = current
        if all(used[i] or seq[i] is None for i in range(len(seq))):
            return current


def format_countable(seq: Sequence[Optional[int]]) -> str:
    return " ".join(INFINITY if s is None else str(s) for s in seq)


def parse_countable(text: str, source: Optional[str] = None) -> Labelled:
    out: Labelled = []
    for token in text.split():
        if token == INFINITY:
            out.append(None)
            continue
        try:
            value = int(token)
        except ValueError:
            raise ParseError(f"expected a positive integer or '{INFINITY}', got {token!r}", None, source)
        if value < 1:
            raise ParseError(f"labels are positive, got {value}", None, source)
        out.append(value)
    return out
