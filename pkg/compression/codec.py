"""
Vertical recoding of marked rows onto a small alphabet.

Each k-rectangle between consecutive row-k markers is replaced by a code block
of the same length. Code blocks start with the marker 1 0^s and never contain
it elsewhere, so the coded text carries its own block boundaries.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from arrays.rectangles import KRectangle, concatenate_rectangles, extract_rectangles
from arrays.window import MARKER, ArrayWindow, single_row
from compression.family import CodeFamily, marker_positions
from core.errors import CapacityError, DesynchronizationError, InputError, UnknownBlockError
from symbolic.words import Word


@dataclass(frozen=True)
class CompressionMap:
    family: CodeFamily
    depth: int
    assignment: Tuple[Tuple[KRectangle, Word], ...] = ()

    @cached_property
    def encoder(self) -> Dict[KRectangle, str]:
        return {rect: "".join(block) for rect, block in self.assignment}

    @cached_property
    def decoder(self) -> Dict[str, KRectangle]:
        return {"".join(block): rect for rect, block in self.assignment}

    def __len__(self) -> int:
        return len(self.assignment)


@dataclass
class DecodeResult:
    rectangles: List[KRectangle] = field(default_factory=list)
    skipped: int = 0

    def window(self, start: int = 0) -> ArrayWindow:
        return concatenate_rectangles(self.rectangles, start)

    def row_text(self) -> str:
        if any(r.depth != 1 for r in self.rectangles):
            raise InputError("only depth-1 results render as a single row")
        return join_row([r.rows[0] for r in self.rectangles])


def split_row(text: str) -> List[Word]:
    """
    Blocks of a marked row such as "ab|ba|ab|" or "a b | b a |". Every block
    is terminated by a marker; a leading marker is allowed and ignored.
    """
    text = text.strip()
    if not text.endswith(MARKER):
        raise InputError(f"marked row must end with '{MARKER}': {text!r}")
    tokens = text.split() if any(c.isspace() for c in text) else list(text)
    if tokens and tokens[0] == MARKER:
        tokens = tokens[1:]
    blocks: List[Word] = []
    current: List[str] = []
    for token in tokens:
        if token == MARKER:
            if not current:
                raise InputError(f"empty block in marked row {text!r}")
            blocks.append(tuple(current))
            current = []
        else:
            current.append(token)
    return blocks


def join_row(blocks: Sequence[Word]) -> str:
    if all(len(s) == 1 for b in blocks for s in b):
        return "".join("".join(b) + MARKER for b in blocks)
    return " ".join(" ".join(b) + " " + MARKER for b in blocks)


def block_rectangle(block: Word) -> KRectangle:
    return KRectangle(1, single_row(block, (-1, len(block) - 1)))


def compress(rects: Iterable[KRectangle], family: CodeFamily) -> CompressionMap:
    """The i-th rectangle of length n in canonical order gets the i-th family block of length n."""
    distinct = sorted(set(rects), key=KRectangle.sort_key)
    if not distinct:
        return CompressionMap(family, 0)
    depths = {r.depth for r in distinct}
    if len(depths) > 1:
        raise InputError(f"rectangles of mixed depths {sorted(depths)} cannot share a map")

    by_length: Dict[int, List[KRectangle]] = defaultdict(list)
    for r in distinct:
        by_length[r.width].append(r)

    assignment: List[Tuple[KRectangle, Word]] = []
    for n in sorted(by_length):
        members = by_length[n]
        blocks = family.blocks(n)
        if len(blocks) < len(members):
            raise CapacityError(n, len(members), len(blocks))
        assignment.extend(zip(members, blocks))
    logging.info(
        "Compression map: %d rectangles over lengths %s onto %d symbols (s=%d)",
        len(assignment),
        sorted(by_length),
        family.ell,
        family.s,
    )
    return CompressionMap(family, depths.pop(), tuple(assignment))


RowInput = Union[str, ArrayWindow, Sequence[KRectangle]]


def _rectangles_of(row: RowInput, cmap: CompressionMap) -> List[KRectangle]:
    if isinstance(row, str):
        return [block_rectangle(b) for b in split_row(row)]
    if isinstance(row, ArrayWindow):
        return extract_rectangles(row, cmap.depth)
    return list(row)


def recode(row: RowInput, cmap: CompressionMap) -> str:
    """Replace consecutive rectangles by their code blocks."""
    out = []
    for i, rect in enumerate(_rectangles_of(row, cmap)):
        block = cmap.encoder.get(rect)
        if block is None:
            raise UnknownBlockError(f"block {i} ({rect.label()}) has no code in the map")
        out.append(block)
    return "".join(out)


def decode(coded: str, cmap: CompressionMap, one_sided: bool = False) -> DecodeResult:
    """
    Cut the coded text at the marker occurrences and look each piece up. With
    one_sided, symbols before the first marker (an incomplete block) are skipped.
    """
    coded = coded.strip()
    symbols = set(cmap.family.symbols)
    for i, c in enumerate(coded):
        if c not in symbols:
            raise DesynchronizationError(f"symbol {c!r} outside the code alphabet", i)
    if not coded:
        return DecodeResult()

    starts = marker_positions(cmap.family, coded)
    if not starts:
        if one_sided:
            return DecodeResult([], len(coded))
        raise DesynchronizationError("no block marker in coded text", 0)
    if starts[0] != 0 and not one_sided:
        raise DesynchronizationError("coded text does not start with a block marker", 0)

    result = DecodeResult(skipped=starts[0])
    for start, end in zip(starts, starts[1:] + [len(coded)]):
        rect = cmap.decoder.get(coded[start:end])
        if rect is None:
            raise DesynchronizationError(f"piece {coded[start:end]!r} is not a code block", start)
        result.rectangles.append(rect)
    if result.skipped:
        logging.debug("Skipped %d symbols of an incomplete leading block", result.skipped)
    return result
