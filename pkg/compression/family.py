import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from core.errors import InputError
from symbolic.words import Word


def choose_ell(h: float) -> int:
    """Least integer strictly larger than 2^h."""
    if h < 0:
        raise InputError(f"entropy must be nonnegative, got {h}")
    x = 2.0**h
    nearest = round(x)
    if math.isclose(x, nearest, rel_tol=1e-9, abs_tol=1e-12):
        return int(nearest) + 1
    return math.floor(x) + 1


def _avoidance_automaton(pattern: Word, symbols: Tuple[str, ...]) -> Dict[Tuple[int, str], int]:
    """Transitions on 'length of the longest suffix that is a prefix of pattern'; reaching len(pattern) is dropped."""
    table: Dict[Tuple[int, str], int] = {}
    for state in range(len(pattern)):
        for a in symbols:
            text = pattern[:state] + (a,)
            nxt = 0
            for size in range(min(len(text), len(pattern)), 0, -1):
                if text[len(text) - size :] == pattern[:size]:
                    nxt = size
                    break
            if nxt < len(pattern):
                table[(state, a)] = nxt
    return table


@dataclass(frozen=True)
class CodeFamily:
    """
    Blocks 1 0^s w over the digits 0..ell-1, where w avoids the marker 1 0^s.
    Marker occurrences in a concatenation of blocks are exactly the block starts.
    """

    ell: int
    s: int
    _cache: Dict[int, Tuple[Word, ...]] = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self) -> None:
        if not 2 <= self.ell <= 10:
            raise InputError(f"ell must lie in 2..10 so symbols stay single digits, got {self.ell}")
        if self.s < 1:
            raise InputError(f"marker length s must be positive, got {self.s}")

    @property
    def symbols(self) -> Tuple[str, ...]:
        return tuple(str(i) for i in range(self.ell))

    @property
    def marker(self) -> Word:
        return ("1",) + ("0",) * self.s

    @property
    def min_length(self) -> int:
        return self.s + 2

    def blocks(self, n: int) -> Tuple[Word, ...]:
        """Blocks of length n in lexicographic order; empty below the minimum length."""
        if n < self.min_length:
            return ()
        if n not in self._cache:
            table = _avoidance_automaton(self.marker, self.symbols)
            out: List[Word] = []

            def grow(word: Word, state: int) -> None:
                if len(word) == n - len(self.marker):
                    out.append(self.marker + word)
                    return
                for a in self.symbols:
                    nxt = table.get((state, a))
                    if nxt is not None:
                        grow(word + (a,), nxt)

            grow((), 0)
            self._cache[n] = tuple(out)
        return self._cache[n]

    def count(self, n: int) -> int:
        """c(n) by dynamic programming over the avoidance automaton."""
        if n < self.min_length:
            return 0
        table = _avoidance_automaton(self.marker, self.symbols)
        counts = {0: 1}
        for _ in range(n - len(self.marker)):
            grown: Dict[int, int] = {}
            for state, c in counts.items():
                for a in self.symbols:
                    nxt = table.get((state, a))
                    if nxt is not None:
                        grown[nxt] = grown.get(nxt, 0) + c
            counts = grown
        return sum(counts.values())

    def rate(self, n: int) -> float:
        c = self.count(n)
        return math.log2(c) / n if c else 0.0


def build_family(ell: int, s: int, n: int) -> Tuple[Tuple[Word, ...], int]:
    family = CodeFamily(ell, s)
    if n < family.min_length:
        raise InputError(f"block length {n} is below the minimum s + 2 = {family.min_length}")
    blocks = family.blocks(n)
    logging.debug("Code family ell=%d s=%d n=%d has %d blocks", ell, s, n, len(blocks))
    return blocks, len(blocks)


def marker_positions(family: CodeFamily, coded: str) -> List[int]:
    m = "".join(family.marker)
    return [i for i in range(len(coded) - len(m) + 1) if coded.startswith(m, i)]
