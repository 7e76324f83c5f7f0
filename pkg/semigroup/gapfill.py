from typing import Dict, Hashable, List, Sequence, Tuple

from core.errors import InputError, UnrepresentableError
from semigroup.frobenius import GeneratorSet, fill_length, frobenius

Block = Tuple[Hashable, ...]


class GapFiller:
    """
    Single Responsibility:
      - Concatenate a finite family of blocks into the all-blocks kernel.
      - Fill any length above the Frobenius number of the block lengths, always
        with the same concatenation for the same length.
    """

    def __init__(self, blocks: Sequence[Block]) -> None:
        if not blocks:
            raise InputError("gap filling needs at least one block")
        self._blocks: List[Block] = sorted(set(tuple(b) for b in blocks), key=lambda b: (len(b), b))
        if any(len(b) == 0 for b in self._blocks):
            raise InputError("blocks must be nonempty")
        self._by_length: Dict[int, Block] = {}
        for b in self._blocks:
            self._by_length.setdefault(len(b), b)
        self._gens = GeneratorSet.of(self._by_length.keys())
        self._cache: Dict[int, Tuple[Block, ...]] = {}

    @property
    def blocks(self) -> List[Block]:
        return list(self._blocks)

    @property
    def frobenius_number(self) -> int:
        return frobenius(self._gens).frobenius

    def kernel(self) -> Tuple[Block, ...]:
        """Every block exactly once, in canonical (length, content) order."""
        return tuple(self._blocks)

    def kernel_length(self) -> int:
        return sum(len(b) for b in self._blocks)

    def fill(self, m: int) -> Tuple[Block, ...]:
        if m in self._cache:
            return self._cache[m]
        if m <= self.frobenius_number:
            raise UnrepresentableError(
                f"length {m} is not above the Frobenius number {self.frobenius_number} of block lengths "
                f"{list(self._gens.generators)}"
            )
        parts = fill_length(m, self._gens.generators)
        filled = tuple(self._by_length[p] for p in parts)
        self._cache[m] = filled
        return filled

    def pad_kernel(self, m: int) -> Tuple[Block, ...]:
        """The kernel followed by a consistent filling of the remaining m - |kernel| columns."""
        rest = m - self.kernel_length()
        if rest < 0:
            raise UnrepresentableError(f"length {m} is shorter than the kernel ({self.kernel_length()})")
        if rest == 0:
            return self.kernel()
        return self.kernel() + self.fill(rest)


def concatenate(blocks: Sequence[Block]) -> Block:
    out: List[Hashable] = []
    for b in blocks:
        out.extend(b)
    return tuple(out)
