"""
Exception hierarchy.

InputError subclasses describe bad input (exit status 2 on the CLI); the rest
describe computations that cannot produce a result for otherwise valid input.
"""
from typing import Optional, Sequence


class ZdynError(Exception):
    """Base class for every error raised by the toolkit."""


class InputError(ZdynError, ValueError):
    pass


class ParseError(InputError):
    def __init__(self, message: str, line: Optional[int] = None, source: Optional[str] = None) -> None:
        self.line = line
        self.source = source
        where = ""
        if source:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}".strip() if where else message)


class AlphabetError(InputError):
    pass


class MalformedWindowError(InputError):
    pass


class BoundExceededError(InputError):
    pass


class StationarityError(InputError):
    pass


class AdjacencyError(InputError):
    pass


class SpacingError(InputError):
    pass


class EmptyLanguageError(ZdynError):
    pass


class GapTooSmallError(ZdynError):
    def __init__(self, gap: int, left: int, right: int, n: int) -> None:
        self.gap = gap
        self.left = left
        self.right = right
        super().__init__(
            f"gap of length {gap} between markers {left} and {right} is shorter than {n}*({n}+1)={n * (n + 1)}"
        )


class NotSeparatedError(ZdynError):
    def __init__(self, message: str, witness: Sequence[str]) -> None:
        self.witness = tuple(witness)
        super().__init__(message)


class RadiusOverflowError(ZdynError):
    pass


class NoMarkersError(ZdynError):
    pass


class EmptyCountsError(ZdynError):
    pass


class UnrepresentableError(ZdynError):
    pass


class CapacityError(ZdynError):
    def __init__(self, length: int, needed: int, available: int) -> None:
        self.length = length
        self.needed = needed
        self.available = available
        super().__init__(
            f"code family has {available} blocks of length {length} but {needed} rectangles need one; "
            f"increase k or ell"
        )


class UnknownBlockError(ZdynError):
    pass


class DesynchronizationError(ZdynError):
    def __init__(self, message: str, position: int) -> None:
        self.position = position
        super().__init__(f"{message} (position {position})")


class LabelCollisionError(ZdynError):
    pass
