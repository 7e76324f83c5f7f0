import itertools
import logging
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Dict, FrozenSet, Hashable, Iterable, Optional, Set, Tuple

from core.errors import AlphabetError, BoundExceededError, InputError
from core.settings import get_limits
from symbolic.words import Alphabet, Word, contains_factor, factors, sorted_words

GraphEdge = Tuple[str, str, str]  # (state, symbol, state)


class Mode(str, Enum):
    FORBID = "forbid"
    ALLOW = "allow"
    GRAPH = "graph"


@dataclass(frozen=True)
class SubshiftSpec:
    """
    A subshift presented by forbidden words, by allowed words of one fixed
    length (the memory), or by a finite labelled graph whose path labels are
    the admissible words.
    """

    alphabet: Alphabet
    mode: Mode
    words: Tuple[Word, ...] = ()
    memory: int = 1
    graph: Tuple[GraphEdge, ...] = ()
    name: str = ""

    def __post_init__(self) -> None:
        mode = Mode(self.mode)
        object.__setattr__(self, "mode", mode)
        max_memory = get_limits().max_memory

        if mode is Mode.GRAPH:
            if not self.graph:
                raise InputError("graph presentation needs at least one edge")
            for _, symbol, _ in self.graph:
                if symbol not in self.alphabet:
                    raise AlphabetError(f"graph label {symbol!r} is not in alphabet {list(self.alphabet)}")
            object.__setattr__(self, "graph", tuple(sorted(set(self.graph))))
            object.__setattr__(self, "memory", 0)
            return

        words = {self.alphabet.check(w) for w in self.words}
        if mode is Mode.FORBID:
            if any(len(w) < 1 for w in words):
                raise InputError("forbidden words must have length at least 1")
            memory = max((len(w) for w in words), default=1)
        else:
            memory = int(self.memory)
            if memory < 1:
                raise InputError(f"allowed-words memory must be at least 1, got {memory}")
            bad = [w for w in words if len(w) != memory]
            if bad:
                raise InputError(f"allowed words must all have length {memory}: {bad[:3]}")
        if memory > max_memory:
            raise BoundExceededError(f"memory {memory} exceeds limits.max_memory={max_memory}")
        object.__setattr__(self, "words", tuple(sorted_words(words, self.alphabet)))
        object.__setattr__(self, "memory", memory)
        # forbidden words are converted to their allowed blocks up front
        logging.debug("%s: %d allowed blocks of length %d", self.name or "subshift", len(self.allowed_blocks), memory)

    @classmethod
    def forbidding(cls, alphabet: Alphabet, words: Iterable[Word], name: str = "") -> "SubshiftSpec":
        return cls(alphabet=alphabet, mode=Mode.FORBID, words=tuple(tuple(w) for w in words), name=name)

    @classmethod
    def allowing(cls, alphabet: Alphabet, memory: int, words: Iterable[Word], name: str = "") -> "SubshiftSpec":
        return cls(
            alphabet=alphabet, mode=Mode.ALLOW, words=tuple(tuple(w) for w in words), memory=memory, name=name
        )

    @classmethod
    def from_graph(cls, alphabet: Alphabet, edges: Iterable[GraphEdge], name: str = "") -> "SubshiftSpec":
        return cls(alphabet=alphabet, mode=Mode.GRAPH, graph=tuple(tuple(e) for e in edges), name=name)

    @property
    def forbidden(self) -> Tuple[Word, ...]:
        return self.words if self.mode is Mode.FORBID else ()

    @cached_property
    def allowed_blocks(self) -> Tuple[Word, ...]:
        """The length-memory blocks; for forbidden words, all blocks free of them."""
        if self.mode is Mode.ALLOW:
            return self.words
        if self.mode is Mode.GRAPH:
            raise InputError("graph presentations have no finite memory")
        blocks = (
            w
            for w in itertools.product(self.alphabet.symbols, repeat=self.memory)
            if not any(contains_factor(w, f) for f in self.words)
        )
        return tuple(blocks)

    def as_allowed(self) -> "SubshiftSpec":
        if self.mode is Mode.ALLOW:
            return self
        return SubshiftSpec.allowing(self.alphabet, self.memory, self.allowed_blocks, name=self.name)

    @cached_property
    def short_factors(self) -> Dict[int, FrozenSet[Word]]:
        """Allowed mode: factors of allowed blocks, by length below the memory."""
        out: Dict[int, Set[Word]] = defaultdict(set)
        for w in self.allowed_blocks:
            for length in range(self.memory):
                out[length].update(factors(w, length))
        return {k: frozenset(v) for k, v in out.items()}

    @cached_property
    def automaton(self) -> "FollowerAutomaton":
        return FollowerAutomaton(self)


class FollowerAutomaton:
    """
    Single Responsibility:
      - Read words left to right deterministically, rejecting a word as soon as
        it stops being admissible.

    States are recent-history tuples for forbidden/allowed presentations and
    sets of graph states (subset construction) for graph presentations.
    """

    def __init__(self, spec: SubshiftSpec) -> None:
        self.spec = spec
        self.memory = spec.memory
        if spec.mode is Mode.GRAPH:
            moves: Dict[Tuple[str, str], Set[str]] = defaultdict(set)
            for source, symbol, target in spec.graph:
                moves[(source, symbol)].add(target)
            self._moves = dict(moves)
            self.start: Hashable = frozenset({e[0] for e in spec.graph} | {e[2] for e in spec.graph})
        else:
            self.start = ()
        if spec.mode is Mode.FORBID:
            self._forbidden = set(spec.words)
            self._lengths = sorted({len(w) for w in spec.words})
        if spec.mode is Mode.ALLOW:
            self._allowed = set(spec.words)
            self._prefixes = {w[:i] for w in spec.words for i in range(1, spec.memory)}

    def _keep(self, tail: Word) -> Word:
        keep = self.memory - 1
        return tail[len(tail) - keep :] if keep > 0 else ()

    def step(self, state: Hashable, symbol: str) -> Optional[Hashable]:
        mode = self.spec.mode
        if mode is Mode.GRAPH:
            nxt: Set[str] = set()
            for source in state:  # type: ignore[union-attr]
                nxt |= self._moves.get((source, symbol), set())
            return frozenset(nxt) if nxt else None

        tail = state + (symbol,)  # type: ignore[operator]
        if mode is Mode.FORBID:
            for length in self._lengths:
                if length <= len(tail) and tail[len(tail) - length :] in self._forbidden:
                    return None
            return self._keep(tail)

        if len(tail) < self.memory:
            return tail if tail in self._prefixes else None
        if tail[len(tail) - self.memory :] not in self._allowed:
            return None
        return self._keep(tail)

    def run(self, word: Iterable[str]) -> Optional[Hashable]:
        state: Optional[Hashable] = self.start
        for symbol in word:
            state = self.step(state, symbol)
            if state is None:
                return None
        return state

    def reachable_states(self) -> list:
        """States reachable from the start, in breadth-first order over the alphabet order."""
        order = [self.start]
        seen = {self.start}
        i = 0
        while i < len(order):
            state = order[i]
            i += 1
            for symbol in self.spec.alphabet:
                nxt = self.step(state, symbol)
                if nxt is not None and nxt not in seen:
                    seen.add(nxt)
                    order.append(nxt)
        logging.debug("Follower automaton of %s has %d reachable states", self.spec.name or "subshift", len(order))
        return order
