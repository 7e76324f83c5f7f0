import logging
import math
from collections import defaultdict
from typing import Dict, Hashable, List, Sequence

import numpy as np

from core.errors import EmptyLanguageError, InputError
from symbolic.subshift import Mode, SubshiftSpec
from symbolic.words import Word, factors, sorted_words


def _check_length(n: int) -> None:
    if n < 1:
        raise InputError(f"word length must be positive, got {n}")


def _short_allowed(spec: SubshiftSpec, n: int) -> bool:
    return spec.mode is Mode.ALLOW and n < spec.memory


def language(spec: SubshiftSpec, n: int) -> List[Word]:
    """All admissible words of length n, lexicographic in the alphabet order."""
    _check_length(n)
    if _short_allowed(spec, n):
        return sorted_words(spec.short_factors.get(n, frozenset()), spec.alphabet)

    automaton = spec.automaton
    frontier = [((), automaton.start)]
    for _ in range(n):
        grown = []
        for word, state in frontier:
            for symbol in spec.alphabet:
                nxt = automaton.step(state, symbol)
                if nxt is not None:
                    grown.append((word + (symbol,), nxt))
        frontier = grown
    return [word for word, _ in frontier]


def block_count(spec: SubshiftSpec, n: int) -> int:
    _check_length(n)
    if _short_allowed(spec, n):
        return len(spec.short_factors.get(n, frozenset()))

    automaton = spec.automaton
    counts: Dict[Hashable, int] = {automaton.start: 1}
    for _ in range(n):
        grown: Dict[Hashable, int] = defaultdict(int)
        for state, count in counts.items():
            for symbol in spec.alphabet:
                nxt = automaton.step(state, symbol)
                if nxt is not None:
                    grown[nxt] += count
        counts = grown
    return sum(counts.values())


def entropy_estimate(spec: SubshiftSpec, n: int) -> float:
    count = block_count(spec, n)
    if count == 0:
        raise EmptyLanguageError(f"no admissible words of length {n}")
    return math.log2(count) / n


def transition_matrix(spec: SubshiftSpec) -> np.ndarray:
    automaton = spec.automaton
    states = automaton.reachable_states()
    index = {s: i for i, s in enumerate(states)}
    matrix = np.zeros((len(states), len(states)), dtype=float)
    for state, i in index.items():
        for symbol in spec.alphabet:
            nxt = automaton.step(state, symbol)
            if nxt is not None:
                matrix[i, index[nxt]] += 1.0
    return matrix


def entropy_limit(spec: SubshiftSpec) -> float:
    """log2 of the spectral radius of the follower automaton: the limit of entropy_estimate."""
    matrix = transition_matrix(spec)
    radius = float(np.max(np.abs(np.linalg.eigvals(matrix)))) if matrix.size else 0.0
    if radius < 0.5:
        raise EmptyLanguageError("the presentation admits no bi-infinite point")
    logging.debug("Spectral radius %.6f over %d states", radius, matrix.shape[0])
    return max(0.0, math.log2(radius))


def is_admissible(spec: SubshiftSpec, w: Sequence[str]) -> bool:
    word = spec.alphabet.check(w)
    if not word:
        return True
    if spec.mode is Mode.FORBID:
        forbidden = set(spec.words)
        lengths = {len(f) for f in forbidden}
        return not any(f in forbidden for length in lengths for f in factors(word, length))
    if spec.mode is Mode.ALLOW:
        if len(word) < spec.memory:
            return word in spec.short_factors.get(len(word), frozenset())
        allowed = set(spec.words)
        return all(f in allowed for f in factors(word, spec.memory))
    return spec.automaton.run(word) is not None
