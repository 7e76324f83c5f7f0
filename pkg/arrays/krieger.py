import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from arrays.cylinders import (
    CylinderSet,
    common_radius,
    difference,
    neighborhood,
    union,
)
from core.errors import InputError, NotSeparatedError
from core.settings import get_limits
from symbolic.language import language
from symbolic.subshift import Mode, SubshiftSpec
from symbolic.words import Word


@dataclass
class KriegerReport:
    n: int
    radius: int
    separated: bool
    separation_witness: Optional[Word] = None
    covered_cover: bool = True
    cover_witness: Optional[Word] = None
    window_length: int = 0
    uncovered: List[Word] = field(default_factory=list)
    uncovered_total: int = 0

    @property
    def covers_everything(self) -> bool:
        return self.uncovered_total == 0


def separation_witness(spec: SubshiftSpec, c: CylinderSet, n: int) -> Optional[Word]:
    """First admissible word of length n + 2r holding two visits closer than n, or None."""
    if n <= 1 or c.is_empty():
        return None
    r = c.radius
    for w in language(spec, n + 2 * r):
        visits = [i for i in range(r, len(w) - r) if c.contains_at(w, i)]
        if any(b - a < n for a, b in zip(visits, visits[1:])):
            return w
    return None


def _cover_witness(spec: SubshiftSpec, f: CylinderSet, cover: CylinderSet, n: int) -> Optional[Word]:
    """A point of the cover with no visit to f within distance n - 1, as a central word."""
    near, cov = common_radius(spec, [neighborhood(spec, f, n - 1), cover])
    missing = cov.patterns - near.patterns
    if not missing:
        return None
    return min(missing, key=spec.alphabet.sort_key)


def _uncovered_words(spec: SubshiftSpec, f: CylinderSet, length: int, limit: int) -> Tuple[List[Word], int]:
    """Admissible words of the given length with no decidable visit to f; pruned depth-first search."""
    r = f.radius
    if spec.mode is Mode.ALLOW and length < spec.memory:
        words = [w for w in language(spec, length) if not any(f.contains_at(w, i) for i in range(r, length - r))]
        return words[:limit], len(words)

    automaton = spec.automaton
    found: List[Word] = []
    total = 0
    stack = [((), automaton.start)]
    while stack:
        word, state = stack.pop()
        if len(word) >= 2 * r + 1 and f.contains_at(word, len(word) - 1 - r):
            continue
        if len(word) == length:
            total += 1
            if len(found) < limit:
                found.append(word)
            continue
        for symbol in reversed(spec.alphabet.symbols):
            nxt = automaton.step(state, symbol)
            if nxt is not None:
                stack.append((word + (symbol,), nxt))
    return found, total


def krieger_markers(spec: SubshiftSpec, n: int, cover: Sequence[CylinderSet]) -> Tuple[CylinderSet, KriegerReport]:
    """
    Merge n-separated cover members into one n-separated marker set:
    F_1 = U_1 and F_{j+1} = F_j joined with the part of U_{j+1} lying
    farther than n - 1 from every visit to F_j.
    """
    if n < 1:
        raise InputError(f"separation must be positive, got {n}")
    if not cover:
        raise InputError("cover must contain at least one cylinder set")
    if len(set(cover)) != len(cover):
        raise InputError("cover members must be pairwise distinct")

    for j, member in enumerate(cover, start=1):
        witness = separation_witness(spec, member, n)
        if witness is not None:
            raise NotSeparatedError(f"cover member {j} is not {n}-separated", witness)

    f = cover[0]
    for j, member in enumerate(cover[1:], start=2):
        fresh = difference(spec, member, neighborhood(spec, f, n - 1))
        f = union(spec, f, fresh)
        logging.info("Marker set after member %d: radius %d, %d patterns", j, f.radius, len(f.patterns))

    witness = separation_witness(spec, f, n)
    report = KriegerReport(n=n, radius=f.radius, separated=witness is None, separation_witness=witness)

    whole_cover = union(spec, *cover)
    report.cover_witness = _cover_witness(spec, f, whole_cover, n)
    report.covered_cover = report.cover_witness is None

    report.window_length = (2 * n - 1) + 2 * f.radius
    report.uncovered, report.uncovered_total = _uncovered_words(
        spec, f, report.window_length, get_limits().report_limit
    )
    logging.info(
        "Krieger markers n=%d: separated=%s covered_cover=%s uncovered=%d",
        n,
        report.separated,
        report.covered_cover,
        report.uncovered_total,
    )
    return f, report
