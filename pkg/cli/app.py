"""
Command-line driver.

Reports go to stdout behind a versioned header; logs go to stderr. Exit
status 0 means the command ran and the answer is positive, 1 that it ran and
the answer is negative, 2 that the input was bad.
"""
import argparse
import logging
import os
import sys
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from arrays.cylinders import format_cylinder, marker_rectangles, parse_cylinder
from arrays.krieger import krieger_markers
from arrays.markers import MarkerProfile, validate_markers
from arrays.rectangles import KRectangle, count_by_length, entropy_from_rectangles, extract_rectangles
from arrays.window import ArrayWindow, format_window, load_window
from bratteli.analysis import Verdict, decisive_check, extremal_paths, is_simple_upto, telescope
from bratteli.diagram import OrderedBratteliDiagram, Vertex, extend, path_count, validate
from bratteli.dot import emit_dot
from bratteli.fixtures import compactification_label
from bratteli.parser import load_diagram, serialize_diagram
from bratteli.symbols import k_symbol, path_to_array
from bratteli.trapezoids import (
    adjacency_from_windows,
    rows_admissible,
    sunny_rectangles,
    sunny_subshift,
    trapezoid_diagram,
)
from bratteli.vershik import FinitePath, TailPolicy, path_from_orders, predecessor, successor, vershik_orbit
from compression.codec import CompressionMap, compress, decode, recode
from compression.countable import CountableLabeling, decode_countable, encode_countable, format_countable
from compression.family import CodeFamily, choose_ell
from core.errors import InputError, ZdynError
from core.logs import configure_logging
from core.settings import FIXTURES_DIR, analysis_setting, compression_setting, get_limits
from semigroup.frobenius import GeneratorSet, decompose_pq, frobenius
from symbolic.language import block_count, entropy_estimate, entropy_limit, language
from symbolic.parser import load_subshift
from symbolic.subshift import Mode, SubshiftSpec
from symbolic.words import format_word

REPORT_VERSION = "zdyn-report/1"


# ------------------------------------------------------------------ helpers


def _emit(command: str, lines: Iterable[str]) -> None:
    print(f"# {REPORT_VERSION} {command}")
    for line in lines:
        print(line)


def _resolve(path: str) -> str:
    """Paths that do not exist are looked up among the shipped fixtures."""
    if os.path.exists(path):
        return path
    candidate = os.path.join(FIXTURES_DIR, path)
    if os.path.exists(candidate):
        return candidate
    raise FileNotFoundError(f"No such file or fixture: {path}")


def _diagram(args: argparse.Namespace) -> OrderedBratteliDiagram:
    return load_diagram(_resolve(args.diagram))


def _subshift(path: str) -> SubshiftSpec:
    return load_subshift(_resolve(path))


def _window(path: str) -> ArrayWindow:
    return load_window(_resolve(path))


def _ints(text: str, what: str) -> List[int]:
    try:
        values = [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise InputError(f"{what} must be a comma separated list of integers, got {text!r}")
    if not values:
        raise InputError(f"{what} must not be empty")
    return values


def _vertex(text: str) -> Vertex:
    """'name@level'."""
    name, sep, level = text.partition("@")
    if not sep:
        raise InputError(f"vertex must be written name@level, got {text!r}")
    return int(_ints(level, "vertex level")[0]), name


def _path(d: OrderedBratteliDiagram, args: argparse.Namespace) -> Tuple[OrderedBratteliDiagram, FinitePath]:
    """The path named by --top and --orders; a stationary diagram is unrolled to reach it."""
    orders = _ints(args.orders, "orders") if args.orders else []
    if len(orders) > d.depth and d.stationary is not None:
        d = extend(d, len(orders))
    return d, path_from_orders(d, args.top, orders)


def _tail(args: argparse.Namespace) -> TailPolicy:
    return TailPolicy.STATIONARY if args.stationary else TailPolicy.TRUNCATE


def _profile(text: str) -> MarkerProfile:
    """'lo:hi,lo:hi,...' one pair per row."""
    bounds: List[Tuple[int, int]] = []
    for part in text.split(","):
        lo, sep, hi = part.partition(":")
        if not sep:
            raise InputError(f"profile entries are lo:hi, got {part!r}")
        try:
            bounds.append((int(lo), int(hi)))
        except ValueError:
            raise InputError(f"profile bounds must be integers, got {part!r}")
    return MarkerProfile.uniform(bounds)


def _describe_path(d: OrderedBratteliDiagram, p: FinitePath) -> str:
    text = p.describe()
    if d.name == "example3":
        label = compactification_label(p)
        text += f" = {'inf' if label is None else label}"
    return text


# ------------------------------------------------------------------ symbolic


def _validate_command(args: argparse.Namespace) -> int:
    path = _resolve(args.path)
    if path.endswith(".bd"):
        report = validate(load_diagram(path))
        _emit("validate", [f"diagram: {'ok' if report.ok else 'invalid'}"] + [f"  {i}" for i in report.issues])
        return 0 if report.ok else 1
    if path.endswith(".sub"):
        spec = load_subshift(path)
        lines = [f"subshift {spec.name or path}: ok ({spec.mode.value}, alphabet {' '.join(spec.alphabet)})"]
        if spec.mode is not Mode.GRAPH:
            allowed = spec.as_allowed()
            blocks = " ".join(format_word(w, spec.alphabet) for w in allowed.words)
            lines.append(f"allowed blocks of length {allowed.memory}: {blocks}")
        _emit("validate", lines)
        return 0
    w = load_window(path)
    lines = [f"array: {w.depth} rows over [{w.start}, {w.end}]"]
    if args.profile:
        report = validate_markers(w, _profile(args.profile))
        lines += [f"  row {i.row} {i.kind}: {i.detail}" for i in report.issues]
        _emit("validate", lines)
        return 0 if report.ok else 1
    _emit("validate", lines)
    return 0


def _language_command(args: argparse.Namespace) -> int:
    spec = _subshift(args.subshift)
    limit = get_limits().report_limit
    words = language(spec, args.n)
    lines = [f"|B_{args.n}| = {len(words)}"]
    lines += [format_word(w, spec.alphabet) for w in words[:limit]]
    if len(words) > limit:
        lines.append(f"... {len(words) - limit} more")
    _emit("language", lines)
    return 0 if words else 1


def _entropy_command(args: argparse.Namespace) -> int:
    spec = _subshift(args.subshift)
    lines = [
        f"|B_{args.n}| = {block_count(spec, args.n)}",
        f"estimate = {entropy_estimate(spec, args.n):.6f}",
        f"limit = {entropy_limit(spec):.6f}",
    ]
    if args.marker:
        f = parse_cylinder(spec, args.marker)
        counts = count_by_length(r for rs in marker_rectangles(spec, f, args.max_length).values() for r in rs)
        lines.append("rectangles by length: " + " ".join(f"{n}:{c}" for n, c in counts.items()))
        lines.append(f"rectangle estimate = {entropy_from_rectangles(counts, None, 1):.6f}")
    _emit("entropy", lines)
    return 0


def _markers_command(args: argparse.Namespace) -> int:
    if args.source.endswith(".arr"):
        if not args.profile:
            raise InputError("array marker validation needs --profile lo:hi,...")
        report = validate_markers(_window(args.source), _profile(args.profile))
        lines = [f"markers: {'ok' if report.ok else 'violations'}"]
        lines += [f"  row {i.row} {i.kind} at {i.position}: {i.detail}" for i in report.issues]
        _emit("markers", lines)
        return 0 if report.ok else 1

    spec = _subshift(args.source)
    if not args.cover:
        raise InputError("Krieger markers need at least one --cover block@offset")
    cover = [parse_cylinder(spec, c) for c in args.cover]
    f, report = krieger_markers(spec, args.n, cover)
    lines = [
        f"F = {format_cylinder(spec, f)}",
        f"separated: {report.separated}",
        f"covers cover: {report.covered_cover}",
        f"window length: {report.window_length}",
        f"uncovered words: {report.uncovered_total}",
    ]
    lines += [f"  {format_word(w, spec.alphabet)}" for w in report.uncovered]
    _emit("markers", lines)
    return 0 if report.separated and report.covered_cover else 1


# ----------------------------------------------------------------- semigroup


def _frobenius_command(args: argparse.Namespace) -> int:
    result = frobenius(GeneratorSet.of(args.generators))
    lines = [str(result.frobenius)]
    if result.gcd != 1:
        lines.append(f"gcd {result.gcd}")
    _emit("frobenius", lines)
    return 0


def _decompose_command(args: argparse.Namespace) -> int:
    p, q = decompose_pq(args.m, args.n)
    _emit("decompose", [f"{p} {q}"])
    return 0


# ------------------------------------------------------------------ bratteli


def _successor_command(args: argparse.Namespace) -> int:
    d, p = _path(_diagram(args), args)
    step = predecessor if args.inverse else successor
    nxt = step(d, p)
    if nxt is None:
        _emit("successor", ["minimal" if args.inverse else "maximal"])
        return 1
    _emit("successor", [_describe_path(d, nxt)])
    return 0


def _orbit_command(args: argparse.Namespace) -> int:
    d, p = _path(_diagram(args), args)
    orbit = vershik_orbit(d, p, args.steps, _tail(args))
    lines = [_describe_path(orbit.diagram or d, p) for p in orbit.paths]
    if orbit.stopped:
        lines.append("stopped at a maximal path")
    _emit("orbit", lines)
    return 1 if orbit.stopped else 0


def _extremal_command(args: argparse.Namespace) -> int:
    d = _diagram(args)
    lines = []
    for kind in ("max", "min"):
        paths = extremal_paths(d, args.depth, kind, _tail(args))
        lines.append(f"{kind}: {len(paths)}")
        lines += [f"  {p.describe()}" for p in paths]
    _emit("extremal", lines)
    return 0


def _telescope_command(args: argparse.Namespace) -> int:
    d = _diagram(args)
    keep = _ints(args.keep, "kept levels")
    if keep[-1] > d.depth and d.stationary is not None:
        d = extend(d, keep[-1])
    _emit("telescope", serialize_diagram(telescope(d, keep)).splitlines())
    return 0


def _simple_command(args: argparse.Namespace) -> int:
    result = is_simple_upto(_diagram(args), args.depth)
    _emit(
        "simple",
        [f"simple: {result.simple}", f"depth: {result.depth}", "telescoping: " + " ".join(map(str, result.witness))],
    )
    return 0 if result.simple else 1


def _decisive_command(args: argparse.Namespace) -> int:
    verdict = decisive_check(_diagram(args), args.depth, _tail(args))
    lines = [verdict.status.value, f"depth: {verdict.depth}"]
    w = verdict.witness
    if w is not None:
        where = f" at vertex {w.vertex}" if w.vertex else ""
        lines.append(f"witness: {w.kind}{where} (depth {w.depth}): {w.detail}")
        lines += [f"  {p.describe()}" for p in w.paths]
        if w.image_divergence is not None:
            lines.append(f"  images differ at level {w.image_divergence}")
    lines += [f"note: {n}" for n in verdict.notes]
    _emit("decisive", lines)
    return 1 if verdict.status is Verdict.NON_DECISIVE else 0


def _symbol_command(args: argparse.Namespace) -> int:
    d = _diagram(args)
    v = _vertex(args.vertex)
    if v[0] > d.depth and d.stationary is not None:
        d = extend(d, v[0])
    symbol = k_symbol(d, v)
    _emit("symbol", [f"width {symbol.width} = paths {path_count(d, v)}"] + format_window(symbol).splitlines())
    return 0


def _to_array_command(args: argparse.Namespace) -> int:
    d, p = _path(_diagram(args), args)
    _emit("to-array", format_window(path_to_array(d, p)).splitlines())
    return 0


def _trapezoid_command(args: argparse.Namespace) -> int:
    spec = _subshift(args.subshift) if args.subshift else None
    if args.sunny:
        spec = spec or sunny_subshift()
        rects, adjacency = sunny_rectangles(args.depth, spec)
    elif args.windows:
        rects, adjacency = adjacency_from_windows([_window(p) for p in args.windows], args.depth)
    else:
        raise InputError("trapezoid needs --sunny or at least one array file")
    admissible = rows_admissible(spec) if spec is not None else None
    result = trapezoid_diagram(rects, adjacency, args.depth, admissible)
    d = result.naive if args.naive else result.diagram
    labels = result.naive_labels if args.naive else result.labels
    lines = serialize_diagram(d).splitlines()
    lines += [f"# {name}@{level}: {labels[(level, name)]}" for level, name in sorted(labels)]
    _emit("trapezoid", lines)
    return 0


def _dot_command(args: argparse.Namespace) -> int:
    d = _diagram(args)
    if args.depth and args.depth > d.depth and d.stationary is not None:
        d = extend(d, args.depth)
    _emit("dot", emit_dot(d).splitlines())
    return 0


# --------------------------------------------------------------- compression


def _rectangles_for_map(args: argparse.Namespace) -> List[KRectangle]:
    if args.subshift:
        spec = _subshift(args.subshift)
        if not args.marker:
            raise InputError("--subshift needs --marker block@offset")
        f = parse_cylinder(spec, args.marker)
        return [r for rs in marker_rectangles(spec, f, args.max_length).values() for r in rs]
    if args.windows:
        out: List[KRectangle] = []
        for path in args.windows:
            out.extend(extract_rectangles(_window(path), args.k))
        return out
    raise InputError("a compression map needs --subshift or --windows")


def _family(args: argparse.Namespace) -> CodeFamily:
    s = args.s if args.s is not None else int(compression_setting("marker_length"))
    ell = args.ell
    if ell is None:
        if not args.subshift:
            raise InputError("--ell is required unless --subshift gives an entropy")
        ell = choose_ell(entropy_limit(_subshift(args.subshift)))
    return CodeFamily(ell, s)


def _map(args: argparse.Namespace) -> CompressionMap:
    return compress(_rectangles_for_map(args), _family(args))


def _compress_command(args: argparse.Namespace) -> int:
    cmap = _map(args)
    lines = [f"ell {cmap.family.ell} s {cmap.family.s} depth {cmap.depth}"]
    lines += [f"{rect.label()} -> {''.join(block)}" for rect, block in cmap.assignment]
    for row in args.row or []:
        lines.append(recode(row, cmap))
    _emit("compress", lines)
    return 0


def _decode_command(args: argparse.Namespace) -> int:
    cmap = _map(args)
    lines = []
    for coded in args.coded:
        result = decode(coded, cmap, one_sided=args.one_sided)
        text = result.row_text() if cmap.depth == 1 else " ".join(r.label() for r in result.rectangles)
        lines.append(f"{text}  (skipped {result.skipped})" if result.skipped else text)
    _emit("decode", lines)
    return 0


def _encode_countable_command(args: argparse.Namespace) -> int:
    w = _window(args.window)
    extra = [_window(p) for p in args.labels_from or []]
    labeling = CountableLabeling.from_windows([w] + extra)
    seq = encode_countable(w, _profile(args.profile), labeling)
    back = decode_countable(seq, labeling, w.start) if seq else None
    lines = [f"{i}: {r.label()}" for i, r in enumerate(labeling.rectangles, start=1)]
    lines.append(format_countable(seq))
    ok = back is None or back == w
    lines.append(f"roundtrip: {'ok' if ok else 'mismatch'}")
    _emit("encode-countable", lines)
    return 0 if ok else 1


def _report_command(args: argparse.Namespace) -> int:
    from jobs.fixture_report import run_fixture_report

    frame, path = run_fixture_report(args.output)
    _emit("report", [f"wrote {len(frame)} rows to {path}"] + frame.to_string(index=False).splitlines())
    return 0


# ------------------------------------------------------------------- parser


def _add_path_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("diagram", help="diagram file (.bd) or fixture name")
    parser.add_argument("--top", required=True, help="name of the top vertex")
    parser.add_argument("--orders", default="", help="edge orders bottom-up, e.g. 0,1,2")


def _add_map_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--subshift", help="subshift file: rectangles induced by --marker")
    parser.add_argument("--marker", help="marker cylinder block@offset")
    parser.add_argument("--max-length", type=int, default=8)
    parser.add_argument("--windows", nargs="*", help="array files: rectangles of row --k")
    parser.add_argument("--k", type=int, default=1)
    parser.add_argument("--ell", type=int, default=None)
    parser.add_argument("--s", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    depth = int(analysis_setting("default_depth"))
    parser = argparse.ArgumentParser(prog="zdyn", description="Markers, arrays and Bratteli-Vershik diagrams.")
    parser.add_argument("--log-level", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, func: Callable[[argparse.Namespace], int], help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        return p

    p = command("validate", _validate_command, "check a diagram, subshift or array file")
    p.add_argument("path")
    p.add_argument("--profile", help="gap bounds lo:hi per row, for arrays")

    p = command("language", _language_command, "list admissible words")
    p.add_argument("subshift")
    p.add_argument("--n", type=int, required=True)

    p = command("entropy", _entropy_command, "entropy by block and rectangle counts")
    p.add_argument("subshift")
    p.add_argument("--n", type=int, default=20)
    p.add_argument("--marker", help="marker cylinder block@offset for rectangle counts")
    p.add_argument("--max-length", type=int, default=8)

    p = command("markers", _markers_command, "Krieger markers (.sub) or marker validation (.arr)")
    p.add_argument("source")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--cover", action="append", help="cover member block@offset, repeatable")
    p.add_argument("--profile")

    p = command("frobenius", _frobenius_command, "Frobenius number of a generator set")
    p.add_argument("generators", type=int, nargs="+")

    p = command("decompose", _decompose_command, "m = p*n + q*(n+1) with p maximal")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)

    p = command("successor", _successor_command, "Vershik successor of a finite path")
    _add_path_args(p)
    p.add_argument("--inverse", action="store_true", help="predecessor instead")

    p = command("orbit", _orbit_command, "iterate the Vershik map")
    _add_path_args(p)
    p.add_argument("--steps", type=int, default=8)
    p.add_argument("--stationary", action="store_true")

    for name, func, text in (
        ("extremal", _extremal_command, "maximal and minimal paths"),
        ("decisive", _decisive_command, "finite-depth decisiveness analysis"),
    ):
        p = command(name, func, text)
        p.add_argument("diagram")
        p.add_argument("--depth", type=int, default=depth)
        p.add_argument("--stationary", action="store_true")

    p = command("telescope", _telescope_command, "collapse onto a subsequence of levels")
    p.add_argument("diagram")
    p.add_argument("--keep", required=True, help="kept levels, e.g. 0,2,4")

    p = command("simple", _simple_command, "simplicity up to a depth")
    p.add_argument("diagram")
    p.add_argument("--depth", type=int, default=depth)

    p = command("symbol", _symbol_command, "k-symbol of a vertex")
    p.add_argument("diagram")
    p.add_argument("--vertex", required=True, help="name@level")

    p = command("to-array", _to_array_command, "array window of a finite path")
    _add_path_args(p)

    p = command("trapezoid", _trapezoid_command, "diagram of k-trapezoids")
    p.add_argument("windows", nargs="*")
    p.add_argument("--depth", type=int, default=2)
    p.add_argument("--sunny", action="store_true", help="use the sunny-side-up rectangles")
    p.add_argument("--subshift", help="keep only trapezoids whose rows are admissible in this .sub file")
    p.add_argument("--naive", action="store_true", help="rectangle diagram without flanks")

    p = command("compress", _compress_command, "build the vertical compression map")
    _add_map_args(p)
    p.add_argument("--row", action="append", help="marked row to recode, e.g. 'ab|ba|'")

    p = command("decode", _decode_command, "decode coded rows")
    _add_map_args(p)
    p.add_argument("coded", nargs="+")
    p.add_argument("--one-sided", action="store_true")

    p = command("encode-countable", _encode_countable_command, "countable-alphabet array code")
    p.add_argument("window")
    p.add_argument("--profile", required=True)
    p.add_argument("--labels-from", nargs="*")

    p = command("dot", _dot_command, "Graphviz DOT of a diagram")
    p.add_argument("diagram")
    p.add_argument("--depth", type=int, default=None)

    p = command("report", _report_command, "batch report over every fixture")
    p.add_argument("--output", default=None)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)
    try:
        return int(args.func(args))
    except (InputError, OSError) as exc:
        logging.error("%s", exc)
        return 2
    except ZdynError as exc:
        logging.error("%s", exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
