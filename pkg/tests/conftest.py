"""Shared fixtures: the large census runs are computed once per session."""

from __future__ import annotations

import io
import json
from contextlib import redirect_stdout
from dataclasses import dataclass

import pytest

from balgraph import CensusReport, count_balanced_cubic
from balgraph.cli import main


@dataclass(frozen=True)
class CensusRuns:
    """Census reports for every even vertex count up to 24.

    ``reports[24]`` is produced through the command-line entry point so
    the acceptance checks exercise the same path a user would; the
    smaller counts call the library directly.  ``elapsed`` holds the
    wall-clock seconds the 24-vertex run took.
    """

    reports: dict[int, CensusReport]
    elapsed: float


@pytest.fixture(scope="session")
def census_runs(tmp_path_factory) -> CensusRuns:
    reports = {d: count_balanced_cubic(d) for d in range(6, 24, 2)}

    listing = tmp_path_factory.mktemp("census") / "balanced-24.g6"
    buffer = io.StringIO()
    with redirect_stdout(buffer):
        rc = main(["census", "--vertices", "24", "--balanced", "--out", str(listing)])
    assert rc == 0, "the 24-vertex census run failed"
    summary = json.loads(buffer.getvalue())
    witnesses = tuple(line for line in listing.read_text().splitlines() if line)
    assert summary["balanced"] == len(witnesses)
    reports[24] = CensusReport(
        vertices=24,
        total_cubic_bipartite=summary["total"],
        balanced_count=summary["balanced"],
        witnesses=witnesses,
    )
    return CensusRuns(reports=reports, elapsed=float(summary["elapsed"]))
