from pathlib import Path
from typing import List, Optional

from core.errors import ParseError, ZdynError
from symbolic.subshift import GraphEdge, Mode, SubshiftSpec
from symbolic.words import Alphabet, format_word, parse_word


def parse_subshift(text: str, source: Optional[str] = None) -> SubshiftSpec:
    """
    Directives, one per line:
      ALPHABET a b c
      FORBID w1 w2 ...        (or)  ALLOW m w1 w2 ...   (or)  EDGE state symbol state
      NAME label              (optional)
    Lines starting with '#' are comments.
    """
    alphabet: Optional[Alphabet] = None
    name = ""
    forbid: List[str] = []
    allow: List[str] = []
    memory: Optional[int] = None
    edges: List[GraphEdge] = []
    seen_forbid = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, *rest = line.split()
        head = head.upper()
        try:
            if head == "ALPHABET":
                if alphabet is not None:
                    raise ParseError("ALPHABET declared twice", lineno, source)
                alphabet = Alphabet.of(rest)
            elif head == "NAME":
                name = " ".join(rest)
            elif head == "FORBID":
                seen_forbid = True
                forbid.extend(rest)
            elif head == "ALLOW":
                if not rest:
                    raise ParseError("ALLOW needs the memory m", lineno, source)
                m = int(rest[0])
                if memory is not None and memory != m:
                    raise ParseError(f"ALLOW memory {m} conflicts with earlier {memory}", lineno, source)
                memory = m
                allow.extend(rest[1:])
            elif head == "EDGE":
                if len(rest) != 3:
                    raise ParseError("EDGE needs: state symbol state", lineno, source)
                edges.append((rest[0], rest[1], rest[2]))
            else:
                raise ParseError(f"unknown directive {head!r}", lineno, source)
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(str(exc), lineno, source) from exc

    if alphabet is None:
        raise ParseError("missing ALPHABET directive", None, source)
    modes = sum([seen_forbid, memory is not None, bool(edges)])
    if modes > 1:
        raise ParseError("use exactly one of FORBID, ALLOW or EDGE", None, source)

    try:
        if edges:
            return SubshiftSpec.from_graph(alphabet, edges, name=name)
        if memory is not None:
            return SubshiftSpec.allowing(alphabet, memory, [parse_word(w, alphabet) for w in allow], name=name)
        return SubshiftSpec.forbidding(alphabet, [parse_word(w, alphabet) for w in forbid], name=name)
    except ZdynError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc), None, source) from exc


def load_subshift(path: Path | str) -> SubshiftSpec:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Subshift file not found: {path}")
    return parse_subshift(path.read_text(), source=str(path))


def serialize_subshift(spec: SubshiftSpec) -> str:
    lines = []
    if spec.name:
        lines.append(f"NAME {spec.name}")
    lines.append("ALPHABET " + " ".join(spec.alphabet.symbols))
    if spec.mode is Mode.GRAPH:
        lines.extend(f"EDGE {s} {a} {t}" for s, a, t in spec.graph)
    elif spec.mode is Mode.ALLOW:
        lines.append(f"ALLOW {spec.memory} " + " ".join(format_word(w, spec.alphabet) for w in spec.words))
    else:
        lines.append("FORBID " + " ".join(format_word(w, spec.alphabet) for w in spec.words))
    return "\n".join(line.rstrip() for line in lines) + "\n"
