import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import pandas as pd

from arrays.window import ArrayWindow
from core.errors import GapTooSmallError, InputError, MalformedWindowError
from semigroup.frobenius import decompose_pq


@dataclass(frozen=True)
class MarkerProfile:
    """Gap bounds [n_k^min, n_k^max] for rows 1..K, plus nesting and balance expectations."""

    minimums: Tuple[int, ...]
    maximums: Tuple[int, ...]
    nested: bool = True
    tolerance: float = 1.0

    def __post_init__(self) -> None:
        mins = tuple(int(v) for v in self.minimums)
        maxs = tuple(int(v) for v in self.maximums)
        if len(mins) != len(maxs):
            raise InputError(f"profile has {len(mins)} minimums but {len(maxs)} maximums")
        for k, (lo, hi) in enumerate(zip(mins, maxs), start=1):
            if lo < 1 or hi < lo:
                raise InputError(f"row {k} gap bounds must satisfy 1 <= min <= max, got ({lo}, {hi})")
        if not 0.0 < self.tolerance <= 1.0:
            raise InputError(f"balance tolerance must lie in (0, 1], got {self.tolerance}")
        object.__setattr__(self, "minimums", mins)
        object.__setattr__(self, "maximums", maxs)

    @classmethod
    def uniform(cls, bounds: Sequence[Tuple[int, int]], nested: bool = True, tolerance: float = 1.0) -> "MarkerProfile":
        return cls(tuple(lo for lo, _ in bounds), tuple(hi for _, hi in bounds), nested, tolerance)

    @property
    def depth(self) -> int:
        return len(self.minimums)

    def bounds(self, k: int) -> Tuple[int, int]:
        return self.minimums[k - 1], self.maximums[k - 1]

    def balance(self, k: int) -> float:
        lo, hi = self.bounds(k)
        return lo / hi


@dataclass(frozen=True)
class MarkerIssue:
    row: int
    kind: str  # nesting | gap | inconclusive | balance
    position: Optional[int]
    detail: str


@dataclass
class MarkerReport:
    depth: int
    issues: List[MarkerIssue] = field(default_factory=list)

    @property
    def violations(self) -> List[MarkerIssue]:
        return [i for i in self.issues if i.kind in ("nesting", "gap")]

    @property
    def inconclusive(self) -> List[MarkerIssue]:
        return [i for i in self.issues if i.kind == "inconclusive"]

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def balanced(self) -> bool:
        return not self.of_kind("balance")

    def of_kind(self, kind: str) -> List[MarkerIssue]:
        return [i for i in self.issues if i.kind == kind]

    def to_frame(self) -> pd.DataFrame:
        cols = ["row", "kind", "position", "detail"]
        if not self.issues:
            return pd.DataFrame(columns=cols)
        return pd.DataFrame([[i.row, i.kind, i.position, i.detail] for i in self.issues], columns=cols)


def validate_markers(w: ArrayWindow, p: MarkerProfile) -> MarkerReport:
    if w.depth < 1:
        raise MalformedWindowError("window has no rows")
    report = MarkerReport(depth=w.depth)

    if p.nested:
        for k in range(1, w.depth):
            lower = set(w.row_markers(k))
            for pos in w.row_markers(k + 1):
                if pos not in lower:
                    report.issues.append(
                        MarkerIssue(k + 1, "nesting", pos, f"row {k + 1} marker at {pos} has no row {k} marker")
                    )

    for k in range(1, min(w.depth, p.depth) + 1):
        lo, hi = p.bounds(k)
        marks = w.row_markers(k)
        for left, right in zip(marks, marks[1:]):
            gap = right - left
            if not lo <= gap <= hi:
                report.issues.append(MarkerIssue(k, "gap", left, f"gap {gap} between {left} and {right} outside [{lo}, {hi}]"))

        # truncated stretches only bound the true gap from below
        edges = []
        if not marks:
            edges.append((w.start - 1, w.width))
        else:
            if marks[0] > w.start - 1:
                edges.append((w.start - 1, marks[0] - (w.start - 1)))
            if marks[-1] < w.end:
                edges.append((marks[-1], w.end - marks[-1]))
        for pos, seen in edges:
            if seen > hi:
                report.issues.append(MarkerIssue(k, "gap", pos, f"truncated gap of at least {seen} exceeds {hi}"))
            else:
                report.issues.append(MarkerIssue(k, "inconclusive", pos, f"truncated gap of at least {seen}"))

        if p.balance(k) < p.tolerance:
            report.issues.append(
                MarkerIssue(k, "balance", None, f"ratio {lo}/{hi}={p.balance(k):.3f} below tolerance {p.tolerance}")
            )

    logging.debug("Marker validation: %d violations, %d inconclusive", len(report.violations), len(report.inconclusive))
    return report


def upward_adjust(w: ArrayWindow) -> ArrayWindow:
    """
    Move every row-(k+1) marker left onto the nearest row-k marker at or before it.
    Markers with no row-k marker to their left inside the window are deleted.
    """
    if w.depth < 2:
        return w
    adjusted = w
    for k in range(1, w.depth):
        lower = adjusted.row_markers(k)
        moved = []
        for pos in adjusted.row_markers(k + 1):
            candidates = [q for q in lower if q <= pos]
            if candidates:
                moved.append(candidates[-1])
            else:
                logging.debug("Deleting orphan row %d marker at %d", k + 1, pos)
        adjusted = adjusted.with_markers(k + 1, moved)
    return adjusted


def subdivide_row(w: ArrayWindow, k: int, n: int) -> ArrayWindow:
    """Split every interior row-k gap m into p gaps of n followed by q gaps of n+1."""
    if not 1 <= k <= w.depth:
        raise InputError(f"row {k} outside 1..{w.depth}")
    if n < 1:
        raise InputError(f"subdivision length must be positive, got {n}")

    primary = w.row_markers(k)
    added: List[int] = []
    for left, right in zip(primary, primary[1:]):
        gap = right - left
        if gap < n * (n + 1):
            raise GapTooSmallError(gap, left, right, n)
        p, q = decompose_pq(gap, n)
        pos = left
        for step in [n] * p + [n + 1] * q:
            pos += step
            added.append(pos)
    return w.with_markers(k, list(primary) + added)


def interior_gaps(w: ArrayWindow, k: int) -> List[int]:
    marks = w.row_markers(k)
    return [b - a for a, b in zip(marks, marks[1:])]
