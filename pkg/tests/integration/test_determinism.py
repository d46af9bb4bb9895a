"""Determinism tests for CLI reports.

These tests verify that:
1. Every command that takes --workers prints byte-identical output for 1, 4 and 8 workers
2. Exit codes do not depend on the worker count
3. Reports carry no wall-clock data, so frozen clocks give the same bytes

Reports are compared as raw stdout, not parsed JSON, so key order and float
formatting are covered too.
"""

import pytest
from freezegun import freeze_time
from typer.testing import CliRunner

from ordered_locale_lab.cli.main import cli

runner = CliRunner()

WORKER_COUNTS = (1, 4, 8)

SCENARIO_RUNS = [
    ["scenario", "MINKOWSKI_PLAIN"],
    ["scenario", "POINT_REMOVED"],
    ["scenario", "CONE_CUT"],
    ["scenario", "CURVE_REMOVED_FROM_A"],
    ["scenario", "REGION_REMOVED"],
    ["scenario", "TWO_SLOPES(1,2)"],
]

COMMAND_RUNS = [
    ["check-axioms", "STAR"],
    ["check-axioms", "LVFAIL"],
    ["check-axioms", "TWO_SLOPES(1,2)", "--axiom", "parallel"],
    ["cover", "VEE", "--region", "x", "--target", "z"],
    ["cover", "CHAIN3", "--region", "a,b,c", "--target", "c"],
    ["cover", "CONE_CUT", "--region", "A", "--target", "U", "--semantics", "inext-causal"],
    ["domain", "CHAIN3", "--region", "a", "--semantics", "localic"],
    ["domain", "CONE_CUT", "--format", "svg"],
    ["domain", "REGION_REMOVED", "--format", "ascii"],
]


def run_with_workers(args: list[str], workers: int) -> tuple[int, str]:
    result = runner.invoke(cli, [*args, "--workers", str(workers)])
    return result.exit_code, result.stdout


class TestWorkerDeterminism:
    """Output does not depend on the number of worker threads."""

    @pytest.mark.parametrize("args", SCENARIO_RUNS, ids=lambda a: a[1])
    def test_scenario_library(self, args):
        """Every scenario report is byte-identical across worker counts."""
        runs = [run_with_workers(args, w) for w in WORKER_COUNTS]
        assert runs[0][0] == 0
        assert all(run == runs[0] for run in runs[1:])

    @pytest.mark.parametrize("args", COMMAND_RUNS, ids=lambda a: " ".join(a[:2]))
    def test_commands(self, args):
        """Locale and grid commands are byte-identical across worker counts."""
        runs = [run_with_workers(args, w) for w in WORKER_COUNTS]
        assert runs[0][0] in (0, 1)
        assert runs[0][1]
        assert all(run == runs[0] for run in runs[1:])


class TestClockIndependence:
    """Reports contain no timestamps."""

    def test_frozen_clocks_agree(self):
        """The same report is printed at two different times."""
        with freeze_time("2024-01-01 00:00:00"):
            first = runner.invoke(cli, ["scenario", "CONE_CUT"]).stdout
        with freeze_time("2031-06-15 12:30:00"):
            second = runner.invoke(cli, ["scenario", "CONE_CUT"]).stdout
        assert first == second
