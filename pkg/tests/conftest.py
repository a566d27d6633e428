from __future__ import annotations

from pathlib import Path

import pytest

from kurdkit.normalize import NormalizationReport, replay_rewrites

DATA_DIR = Path(__file__).parent / "data"


def load_gold_pairs() -> list[tuple[str, str, str, str]]:
    """(arabic, latin, flags, note) rows; missing trailing columns padded."""
    rows = []
    for line in (DATA_DIR / "gold_pairs.tsv").read_text(encoding="utf-8").splitlines():
        if not line or line.startswith("#"):
            continue
        cols = (line.split("\t") + ["", "", ""])[:4]
        rows.append(tuple(cols))
    return rows


def assert_report_sound(source: str, report: NormalizationReport) -> None:
    """Replaying the rewrite log against the input must rebuild the output."""
    assert replay_rewrites(source, report.rewrites) == report.output


@pytest.fixture(scope="session")
def gold_pairs() -> list[tuple[str, str, str, str]]:
    return load_gold_pairs()
