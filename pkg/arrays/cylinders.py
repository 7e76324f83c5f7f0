"""
Clopen sets of a subshift written as central patterns of a fixed radius.

A CylinderSet of radius r holds words of length 2r + 1; a point belongs to it
when its coordinates -r..r spell one of them. Set operations first refine the
operands to a common radius.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Sequence, Set, Tuple

from arrays.rectangles import KRectangle
from arrays.window import ArrayWindow, single_row
from core.errors import InputError, ParseError, RadiusOverflowError
from core.settings import get_limits
from symbolic.language import is_admissible, language
from symbolic.subshift import SubshiftSpec
from symbolic.words import Word, format_word, parse_word, sorted_words


@dataclass(frozen=True)
class CylinderSet:
    radius: int
    patterns: FrozenSet[Word]

    def __post_init__(self) -> None:
        if self.radius < 0:
            raise InputError(f"cylinder radius must be nonnegative, got {self.radius}")
        patterns = frozenset(tuple(p) for p in self.patterns)
        size = 2 * self.radius + 1
        bad = [p for p in patterns if len(p) != size]
        if bad:
            raise InputError(f"radius-{self.radius} patterns must have length {size}, got {list(bad)[:3]}")
        object.__setattr__(self, "patterns", patterns)

    @property
    def size(self) -> int:
        return 2 * self.radius + 1

    def is_empty(self) -> bool:
        return not self.patterns

    def contains_at(self, word: Sequence[str], i: int) -> bool:
        """Whether the point spelled by `word` visits the set at index i (decidable indices only)."""
        r = self.radius
        if i < r or i + r >= len(word):
            return False
        return tuple(word[i - r : i + r + 1]) in self.patterns


def _check_radius(radius: int) -> None:
    cap = get_limits().max_radius
    if radius > cap:
        raise RadiusOverflowError(f"refined radius {radius} exceeds limits.max_radius={cap}")


def block_cylinder(spec: SubshiftSpec, block: Sequence[str], offset: int) -> CylinderSet:
    """Points whose coordinates offset..offset+len(block)-1 spell `block`."""
    block = spec.alphabet.check(block)
    if not block:
        raise InputError("cylinder block must not be empty")
    radius = max(abs(offset), abs(offset + len(block) - 1))
    _check_radius(radius)
    lo = radius + offset
    patterns = [w for w in language(spec, 2 * radius + 1) if w[lo : lo + len(block)] == block]
    return CylinderSet(radius, frozenset(patterns))


def parse_cylinder(spec: SubshiftSpec, text: str) -> CylinderSet:
    """'block@offset'; a bare block is centered at 0 on its first symbol."""
    body, _, where = text.partition("@")
    try:
        offset = int(where) if where else 0
    except ValueError:
        raise ParseError(f"bad cylinder offset in {text!r}")
    return block_cylinder(spec, parse_word(body, spec.alphabet), offset)


def format_cylinder(spec: SubshiftSpec, c: CylinderSet) -> str:
    words = [format_word(p, spec.alphabet) for p in pattern_list(spec, c)]
    return f"radius {c.radius}: " + " ".join(words)


def refine(spec: SubshiftSpec, c: CylinderSet, radius: int) -> CylinderSet:
    if radius < c.radius:
        raise InputError(f"cannot refine radius {c.radius} down to {radius}")
    if radius == c.radius:
        return c
    _check_radius(radius)
    d = radius - c.radius
    patterns = [w for w in language(spec, 2 * radius + 1) if w[d : d + c.size] in c.patterns]
    return CylinderSet(radius, frozenset(patterns))


def common_radius(spec: SubshiftSpec, sets: Sequence[CylinderSet]) -> List[CylinderSet]:
    radius = max((c.radius for c in sets), default=0)
    return [refine(spec, c, radius) for c in sets]


def union(spec: SubshiftSpec, *sets: CylinderSet) -> CylinderSet:
    if not sets:
        return CylinderSet(0, frozenset())
    refined = common_radius(spec, sets)
    patterns: Set[Word] = set()
    for c in refined:
        patterns |= c.patterns
    return CylinderSet(refined[0].radius, frozenset(patterns))


def difference(spec: SubshiftSpec, first: CylinderSet, second: CylinderSet) -> CylinderSet:
    a, b = common_radius(spec, [first, second])
    return CylinderSet(a.radius, a.patterns - b.patterns)


def is_subset(spec: SubshiftSpec, first: CylinderSet, second: CylinderSet) -> bool:
    a, b = common_radius(spec, [first, second])
    return a.patterns <= b.patterns


def neighborhood(spec: SubshiftSpec, c: CylinderSet, distance: int) -> CylinderSet:
    """Points x with T^i x in c for some |i| <= distance."""
    if distance < 0:
        raise InputError(f"neighborhood distance must be nonnegative, got {distance}")
    radius = c.radius + distance
    _check_radius(radius)
    patterns = [
        w for w in language(spec, 2 * radius + 1) if any(c.contains_at(w, radius + i) for i in range(-distance, distance + 1))
    ]
    return CylinderSet(radius, frozenset(patterns))


def occurrences(c: CylinderSet, word: Sequence[str]) -> List[int]:
    return [i for i in range(c.radius, len(word) - c.radius) if c.contains_at(word, i)]


def marker_window(spec: SubshiftSpec, f: CylinderSet, word: Sequence[str], start: int = 0) -> ArrayWindow:
    """
    Depth-1 array of `word` with a marker on the left of every visit to f:
    a visit at column i puts a marker at position i - 1.
    """
    word = spec.alphabet.check(word)
    if not is_admissible(spec, word):
        raise InputError(f"{format_word(word, spec.alphabet)} is not admissible")
    marks = [start + i - 1 for i in occurrences(f, word)]
    return single_row(word, marks, start)


def marker_rectangles(spec: SubshiftSpec, f: CylinderSet, max_length: int) -> Dict[int, List[KRectangle]]:
    """
    Distinct 1-rectangles of length <= max_length induced by the marker set f:
    blocks between two consecutive visits to f inside some admissible word.
    """
    if max_length < 1:
        raise InputError(f"max_length must be positive, got {max_length}")
    r = f.radius
    found: Dict[int, Set[Word]] = defaultdict(set)
    for n in range(1, max_length + 1):
        for w in language(spec, n + 2 * r + 1):
            if not (f.contains_at(w, r) and f.contains_at(w, r + n)):
                continue
            if any(f.contains_at(w, r + i) for i in range(1, n)):
                continue
            found[n].add(w[r : r + n])

    out: Dict[int, List[KRectangle]] = {}
    for n in sorted(found):
        out[n] = [KRectangle(1, single_row(b, [-1, n - 1])) for b in sorted_words(found[n], spec.alphabet)]
    logging.info(
        "Marker rectangles up to length %d: %s", max_length, {n: len(rs) for n, rs in out.items()}
    )
    return out


def rectangle_length_counts(spec: SubshiftSpec, f: CylinderSet, max_length: int) -> Dict[int, int]:
    return {n: len(rs) for n, rs in marker_rectangles(spec, f, max_length).items()}


def pattern_list(spec: SubshiftSpec, c: CylinderSet) -> List[Tuple[str, ...]]:
    return sorted_words(c.patterns, spec.alphabet)
