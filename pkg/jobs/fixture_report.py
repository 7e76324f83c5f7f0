import glob
import logging
import os
from typing import List, Optional, Tuple

import pandas as pd

from arrays.rectangles import count_by_length, entropy_from_rectangles, free_block_profile, free_block_rectangles
from bratteli.analysis import decisive_check, is_simple_upto
from bratteli.diagram import path_count
from bratteli.parser import load_diagram
from bratteli.vershik import TailPolicy
from core.errors import ZdynError
from core.logs import configure_logging
from core.settings import FIXTURES_DIR, REPORTS_DIR, analysis_setting
from semigroup.frobenius import GeneratorSet, frobenius
from symbolic.language import entropy_estimate, entropy_limit
from symbolic.parser import load_subshift

REPORT_FILE = os.path.join(REPORTS_DIR, "fixture_report.csv")
COLUMNS = ["fixture", "analysis", "result", "detail"]


def _diagram_rows(path: str, depth: int) -> List[list]:
    name = os.path.basename(path)
    d = load_diagram(path)
    tail = TailPolicy.STATIONARY if d.stationary is not None else TailPolicy.TRUNCATE
    rows = []

    verdict = decisive_check(d, depth, tail)
    witness = verdict.witness
    detail = f"{witness.kind}: {witness.detail}" if witness is not None else ""
    rows.append([name, "decisive", verdict.status.value, detail])

    simple = is_simple_upto(d, min(depth, d.depth) if d.stationary is None else depth)
    rows.append([name, "simple", str(simple.simple), " ".join(map(str, simple.witness))])

    # level-1 symbol widths are the lengths available for gap filling
    widths = sorted({path_count(d, v) for v in d.vertices(1)})
    result = frobenius(GeneratorSet.of(widths))
    rows.append([name, "frobenius", str(result.frobenius), "widths " + " ".join(map(str, widths))])
    return rows


def _subshift_rows(path: str, n: int) -> List[list]:
    name = os.path.basename(path)
    spec = load_subshift(path)
    return [
        [name, "entropy_estimate", f"{entropy_estimate(spec, n):.6f}", f"n={n}"],
        [name, "entropy_limit", f"{entropy_limit(spec):.6f}", ""],
    ]


def _free_block_rows(depths=(1, 2)) -> List[list]:
    rows = []
    for k in depths:
        counts = count_by_length(free_block_rectangles(k))
        value = entropy_from_rectangles(counts, free_block_profile(k), k)
        rows.append(["free-block", f"rectangle_entropy_k{k}", f"{value:.6f}", f"{sum(counts.values())} rectangles"])
    return rows


def run_fixture_report(output: Optional[str] = None) -> Tuple[pd.DataFrame, str]:
    """Entropy, Frobenius and decisiveness over every shipped fixture, one row per analysis."""
    depth = int(analysis_setting("default_depth"))
    rows: List[list] = []
    for path in sorted(glob.glob(os.path.join(FIXTURES_DIR, "*.bd"))):
        try:
            rows.extend(_diagram_rows(path, depth))
        except ZdynError as exc:
            logging.warning("Skipping %s: %s", path, exc)
            rows.append([os.path.basename(path), "error", type(exc).__name__, str(exc)])
    for path in sorted(glob.glob(os.path.join(FIXTURES_DIR, "*.sub"))):
        try:
            rows.extend(_subshift_rows(path, 20))
        except ZdynError as exc:
            logging.warning("Skipping %s: %s", path, exc)
            rows.append([os.path.basename(path), "error", type(exc).__name__, str(exc)])
    rows.extend(_free_block_rows())

    frame = pd.DataFrame(rows, columns=COLUMNS)
    output = output or REPORT_FILE
    os.makedirs(os.path.dirname(output) or ".", exist_ok=True)
    frame.to_csv(output, index=False)
    logging.info("Saved %d report rows to %s", len(frame), output)
    return frame, output


if __name__ == "__main__":
    configure_logging()
    run_fixture_report()
