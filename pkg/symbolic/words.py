from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Tuple

from core.errors import AlphabetError

Word = Tuple[str, ...]


@dataclass(frozen=True)
class Alphabet:
    """Ordered finite set of tokens. The declared order is the lexicographic order of words."""

    symbols: Tuple[str, ...]

    def __post_init__(self) -> None:
        symbols = tuple(str(s) for s in self.symbols)
        if not symbols:
            raise AlphabetError("alphabet must not be empty")
        if len(set(symbols)) != len(symbols):
            raise AlphabetError(f"alphabet has duplicate symbols: {list(symbols)}")
        if any(not s or s.isspace() or "," in s or "|" in s for s in symbols):
            raise AlphabetError(f"symbols must be nonempty tokens without ',' or '|': {list(symbols)}")
        object.__setattr__(self, "symbols", symbols)

    @classmethod
    def of(cls, symbols: Iterable[str]) -> "Alphabet":
        return cls(tuple(symbols))

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self.symbols

    def index(self, symbol: str) -> int:
        try:
            return self.symbols.index(symbol)
        except ValueError:
            raise AlphabetError(f"symbol {symbol!r} is not in alphabet {list(self.symbols)}")

    @property
    def single_char(self) -> bool:
        return all(len(s) == 1 for s in self.symbols)

    def check(self, word: Sequence[str]) -> Word:
        for s in word:
            if s not in self.symbols:
                raise AlphabetError(f"symbol {s!r} is not in alphabet {list(self.symbols)}")
        return tuple(word)

    def sort_key(self, word: Sequence[str]) -> Tuple[int, ...]:
        return tuple(self.index(s) for s in word)


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """Bare strings for single-character alphabets, comma-joined tokens otherwise."""
    text = text.strip()
    if text == "":
        return ()
    if "," in text:
        tokens = [t.strip() for t in text.split(",")]
    elif text in alphabet.symbols:
        tokens = [text]
    elif alphabet.single_char:
        tokens = list(text)
    else:
        raise AlphabetError(f"cannot split {text!r} into symbols of {list(alphabet.symbols)}; use commas")
    return alphabet.check(tokens)


def format_word(word: Sequence[str], alphabet: Alphabet | None = None) -> str:
    single = alphabet.single_char if alphabet is not None else all(len(s) == 1 for s in word)
    return "".join(word) if single else ",".join(word)


def sorted_words(words: Iterable[Word], alphabet: Alphabet) -> list:
    return sorted(words, key=lambda w: (len(w), alphabet.sort_key(w)))


def contains_factor(word: Sequence[str], factor: Sequence[str]) -> bool:
    n, m = len(word), len(factor)
    if m == 0:
        return True
    factor = tuple(factor)
    return any(tuple(word[i : i + m]) == factor for i in range(n - m + 1))


def factors(word: Sequence[str], length: int) -> Iterator[Word]:
    for i in range(len(word) - length + 1):
        yield tuple(word[i : i + length])
