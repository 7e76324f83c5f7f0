import logging
import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, List, Tuple

import numpy as np

from core.errors import BoundExceededError, InputError, UnrepresentableError
from core.settings import get_limits


@dataclass(frozen=True)
class GeneratorSet:
    generators: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.generators:
            raise InputError("generator set must not be empty")
        if any(int(g) < 1 for g in self.generators):
            raise InputError(f"generators must be positive, got {list(self.generators)}")
        object.__setattr__(self, "generators", tuple(sorted({int(g) for g in self.generators})))

    @classmethod
    def of(cls, values: Iterable[int]) -> "GeneratorSet":
        return cls(tuple(values))

    @property
    def gcd(self) -> int:
        return reduce(math.gcd, self.generators)


@dataclass(frozen=True)
class FrobeniusResult:
    gcd: int
    frobenius: int


def _check_bound(size: int) -> None:
    bound = get_limits().dp_bound
    if size > bound:
        raise BoundExceededError(f"representability table of size {size} exceeds dp_bound={bound}")


def representable_table(generators: Tuple[int, ...], upto: int) -> np.ndarray:
    """Boolean table t with t[i] True iff i is a sum of generators (i <= upto)."""
    _check_bound(upto + 1)
    table = np.zeros(upto + 1, dtype=bool)
    table[0] = True
    smallest = min(generators)
    # each stripe only reads entries at least `smallest` below it
    for start in range(smallest, upto + 1, smallest):
        stop = min(start + smallest, upto + 1)
        stripe = np.zeros(stop - start, dtype=bool)
        for g in generators:
            if g > stop - 1:
                continue
            lo = start - g
            if lo >= 0:
                stripe |= table[lo : stop - g]
            else:
                stripe[-lo:] |= table[0 : stop - g]
        table[start:stop] = stripe
    return table


def frobenius(gens: GeneratorSet) -> FrobeniusResult:
    g = gens.gcd
    reduced = tuple(x // g for x in gens.generators)
    if 1 in reduced:
        return FrobeniusResult(gcd=g, frobenius=-g)

    bound = min(reduced) * max(reduced)
    table = representable_table(reduced, bound)
    missing = np.flatnonzero(~table)
    largest = int(missing[-1])
    logging.debug("Frobenius number of %s is %d (gcd %d)", list(gens.generators), largest * g, g)
    return FrobeniusResult(gcd=g, frobenius=largest * g)


def representable(m: int, gens: GeneratorSet) -> bool:
    if m < 0:
        return False
    if m == 0:
        return True
    if m % gens.gcd:
        return False
    return bool(representable_table(gens.generators, m)[m])


def decompose_pq(m: int, n: int) -> Tuple[int, int]:
    """
    Write m = p*n + q*(n+1) with p as large as possible.

    q must be congruent to m modulo n, so the least admissible q is m mod n.
    """
    if m < 1 or n < 1:
        raise InputError(f"decompose_pq needs positive m and n, got m={m}, n={n}")
    q = m % n
    if q * (n + 1) > m:
        raise UnrepresentableError(f"{m} is not a sum of {n}s and {n + 1}s")
    p = (m - q * (n + 1)) // n
    return p, q


def fill_length(m: int, lengths: Iterable[int]) -> List[int]:
    gens = GeneratorSet.of(lengths)
    if m < 1:
        raise InputError(f"length to fill must be positive, got {m}")
    if m % gens.gcd:
        raise UnrepresentableError(f"{m} is not a multiple of gcd {gens.gcd} of {list(gens.generators)}")

    table = representable_table(gens.generators, m)
    if not table[m]:
        raise UnrepresentableError(f"{m} is not a sum of elements of {list(gens.generators)}")

    parts: List[int] = []
    remaining = m
    descending = sorted(gens.generators, reverse=True)
    while remaining > 0:
        for g in descending:
            if g <= remaining and table[remaining - g]:
                parts.append(g)
                remaining -= g
                break
    return sorted(parts)
