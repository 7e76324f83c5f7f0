from dataclasses import dataclass

from core.errors import AlphabetError, InputError
from symbolic.words import Alphabet, Word


@dataclass(frozen=True)
class TwoSidedPoint:
    """
    An eventually periodic two-sided sequence: a finite center placed at
    coordinates [start, start + len(center) - 1], continued to the left by
    repeating left_block (its last symbol sits at start - 1) and to the right
    by repeating right_block (its first symbol sits just after the center).
    """

    alphabet: Alphabet
    center: Word
    start: int
    left_block: Word
    right_block: Word

    def __post_init__(self) -> None:
        object.__setattr__(self, "center", self.alphabet.check(self.center))
        object.__setattr__(self, "left_block", self.alphabet.check(self.left_block))
        object.__setattr__(self, "right_block", self.alphabet.check(self.right_block))
        if not self.center:
            raise InputError("point center must not be empty")
        if not self.left_block or not self.right_block:
            raise InputError("tail blocks must not be empty")
        if not self.start <= 0 <= self.end:
            raise InputError(f"center interval [{self.start}, {self.end}] must contain coordinate 0")

    @classmethod
    def constant_tails(cls, alphabet: Alphabet, center: Word, start: int, left: str, right: str) -> "TwoSidedPoint":
        return cls(alphabet, tuple(center), start, (left,), (right,))

    @property
    def end(self) -> int:
        return self.start + len(self.center) - 1

    def symbol_at(self, i: int) -> str:
        if self.start <= i <= self.end:
            return self.center[i - self.start]
        if i > self.end:
            j = i - self.end - 1
            return self.right_block[j % len(self.right_block)]
        j = self.start - 1 - i
        p = len(self.left_block)
        return self.left_block[p - 1 - (j % p)]


def window_of(point: TwoSidedPoint, a: int, b: int) -> Word:
    if a > b:
        raise InputError(f"window [{a}, {b}] is empty")
    return tuple(point.symbol_at(i) for i in range(a, b + 1))


def shift(point: TwoSidedPoint) -> TwoSidedPoint:
    """The left shift: the shifted point reads at i what the original reads at i + 1."""
    center = point.center
    start = point.start - 1
    right = point.right_block
    if start + len(center) - 1 < 0:
        # keep coordinate 0 inside the center
        center = center + (right[0],)
        right = right[1:] + right[:1]
    return TwoSidedPoint(point.alphabet, center, start, point.left_block, right)


def sunny_side_up_point() -> TwoSidedPoint:
    return TwoSidedPoint.constant_tails(Alphabet.of("01"), ("1",), 0, "0", "0")


def defect_point() -> TwoSidedPoint:
    """...010110101... with the pair 11 at coordinates 0 and 1."""
    return TwoSidedPoint(Alphabet.of("01"), ("1", "1"), 0, ("1", "0"), ("0", "1"))


def constant_point(alphabet: Alphabet, symbol: str) -> TwoSidedPoint:
    if symbol not in alphabet:
        raise AlphabetError(f"symbol {symbol!r} is not in alphabet {list(alphabet)}")
    return TwoSidedPoint.constant_tails(alphabet, (symbol,), 0, symbol, symbol)
