from pathlib import Path
from typing import Dict, List, Optional, Tuple

from bratteli.diagram import Edge, OrderedBratteliDiagram, Stationarity
from core.errors import InputError, ParseError


def _int(token: str, what: str, lineno: int, source: Optional[str]) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", lineno, source)


def _parse_stationary(rest: List[str], lineno: int, source: Optional[str]) -> Stationarity:
    if not rest:
        raise ParseError("STATIONARY needs k0", lineno, source)
    k0 = _int(rest[0], "k0", lineno, source)
    period = 1
    mapping: List[Tuple[str, str]] = []
    for token in rest[1:]:
        if token.startswith("period="):
            period = _int(token.split("=", 1)[1], "period", lineno, source)
        elif "->" in token:
            a, b = token.split("->", 1)
            if not a or not b:
                raise ParseError(f"bad mapping {token!r}", lineno, source)
            mapping.append((a, b))
        else:
            raise ParseError(f"unexpected STATIONARY argument {token!r}", lineno, source)
    try:
        return Stationarity(k0, period, tuple(mapping))
    except InputError as exc:
        raise ParseError(str(exc), lineno, source) from exc


def parse_diagram(text: str, source: Optional[str] = None) -> OrderedBratteliDiagram:
    """
    Directives, one per line ('#' starts a comment):
      NAME label
      LEVEL k v1 v2 ...
      EDGE k source target order
      STATIONARY k0 [period=p] [a->b ...]
    """
    levels: Dict[int, Tuple[str, ...]] = {}
    edges: List[Edge] = []
    stationary: Optional[Stationarity] = None
    name = ""

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        head = head.upper()
        if head == "NAME":
            name = " ".join(rest)
        elif head == "LEVEL":
            if len(rest) < 2:
                raise ParseError("LEVEL needs k and at least one vertex", lineno, source)
            k = _int(rest[0], "level", lineno, source)
            if k in levels:
                raise ParseError(f"level {k} declared twice", lineno, source)
            levels[k] = tuple(rest[1:])
        elif head == "EDGE":
            if len(rest) != 4:
                raise ParseError("EDGE needs: k source target order", lineno, source)
            k = _int(rest[0], "level", lineno, source)
            order = _int(rest[3], "order", lineno, source)
            edges.append(Edge(k, rest[1], rest[2], order))
        elif head == "STATIONARY":
            if stationary is not None:
                raise ParseError("STATIONARY declared twice", lineno, source)
            stationary = _parse_stationary(rest, lineno, source)
        else:
            raise ParseError(f"unknown directive {head!r}", lineno, source)

    if not levels:
        raise ParseError("no LEVEL directives", None, source)
    depth = max(levels)
    missing = [k for k in range(depth + 1) if k not in levels]
    if missing:
        raise ParseError(f"levels {missing} are not declared", None, source)
    try:
        return OrderedBratteliDiagram(tuple(levels[k] for k in range(depth + 1)), tuple(edges), stationary, name)
    except InputError as exc:
        raise ParseError(str(exc), None, source) from exc


def load_diagram(path: Path | str) -> OrderedBratteliDiagram:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Diagram file not found: {path}")
    return parse_diagram(path.read_text(), source=str(path))


def serialize_diagram(d: OrderedBratteliDiagram) -> str:
    lines = []
    if d.name:
        lines.append(f"NAME {d.name}")
    for k, level in enumerate(d.levels):
        lines.append(f"LEVEL {k} " + " ".join(level))
    for e in d.edges:
        lines.append(f"EDGE {e.level} {e.source} {e.target} {e.order}")
    if d.stationary is not None:
        st = d.stationary
        parts = [f"STATIONARY {st.k0}"]
        if st.period != 1:
            parts.append(f"period={st.period}")
        parts.extend(f"{a}->{b}" for a, b in st.mapping)
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"
