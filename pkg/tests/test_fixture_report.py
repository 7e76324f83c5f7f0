import math

import pandas as pd
import pytest

from jobs.fixture_report import COLUMNS, run_fixture_report


def test_report_covers_every_fixture(tmp_path):
    output = tmp_path / "reports" / "fixtures.csv"
    frame, path = run_fixture_report(str(output))
    assert path == str(output)
    assert list(frame.columns) == COLUMNS
    assert "error" not in set(frame["analysis"])

    saved = pd.read_csv(output, dtype=str, keep_default_na=False)
    assert len(saved) == len(frame)

    decisive = frame[frame["analysis"] == "decisive"].set_index("fixture")["result"]
    assert decisive["example1.bd"] == "decisive-evidence"
    assert decisive["example3.bd"] == "non-decisive"
    assert decisive["medynets.bd"] == "non-decisive"

    frob = frame[frame["analysis"] == "frobenius"].set_index("fixture")["result"]
    assert frob["figure.bd"] == "1"

    limits = frame[frame["analysis"] == "entropy_limit"].set_index("fixture")["result"]
    assert limits["full2.sub"] == "1.000000"
    assert limits["golden.sub"] == "0.694242"

    free = frame[frame["fixture"] == "free-block"].set_index("analysis")["result"]
    assert free["rectangle_entropy_k1"] == "1.000000"
    assert float(free["rectangle_entropy_k2"]) == pytest.approx(math.log2(87) / 4, abs=1e-6)
