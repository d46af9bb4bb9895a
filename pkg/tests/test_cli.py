"""Tests for the olab command line.

These tests verify:
1. Every exit code (0 holds, 1 violation, 2 unknown, 3 input error)
2. Inputs resolve from files, library locales and grid scenarios
3. Reports carry their bounds and witnesses
4. Scenario artifacts are written in all three formats
"""

import json
import sys

import pytest
from typer.testing import CliRunner

from ordered_locale_lab.cli.main import cli, main
from ordered_locale_lab.space import SpaceDocument, chain3

runner = CliRunner()


def run_json(args: list[str]) -> tuple[int, dict]:
    result = runner.invoke(cli, args)
    return result.exit_code, json.loads(result.stdout)


@pytest.fixture
def chain3_file(tmp_path):
    path = tmp_path / "CHAIN3.json"
    path.write_text(SpaceDocument.from_space(chain3()).model_dump_json(), encoding="utf-8")
    return path


class TestCheckAxioms:
    """Test the check-axioms command."""

    def test_chain3_holds(self, chain3_file):
        """Every axiom holds on CHAIN3, exit 0."""
        code, data = run_json(["check-axioms", str(chain3_file)])
        assert code == 0
        assert data["input"] == "CHAIN3"
        assert {a["status"] for a in data["axioms"]} == {"holds"}
        assert "budget" in data["bounds"]

    def test_star_violation_witness(self):
        """STAR fails (F−) with witness U = {s}, exit 1."""
        code, data = run_json(["check-axioms", "STAR", "--axiom", "F-"])
        assert code == 1
        (report,) = data["axioms"]
        assert report["status"] == "violated"
        assert report["witness"][0] == "{s}"

    def test_budget_gives_unknown(self):
        """A one-tuple budget leaves every exhaustive check unknown, exit 2."""
        code, data = run_json(["check-axioms", "CHAIN3", "--budget", "1"])
        assert code == 2
        assert data["bounds"]["budget"] == 1
        assert data["axioms"][0]["status"] == "unknown"

    def test_missing_file(self):
        """A missing input is an input error, exit 3."""
        result = runner.invoke(cli, ["check-axioms", "missing.json"])
        assert result.exit_code == 3

    def test_malformed_json(self, tmp_path):
        """A file that is not JSON is an input error."""
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        assert runner.invoke(cli, ["check-axioms", str(path)]).exit_code == 3

    def test_invalid_document(self, tmp_path):
        """Schema violations are input errors."""
        path = tmp_path / "dup.json"
        path.write_text(json.dumps({"name": "DUP", "points": ["a", "a"]}), encoding="utf-8")
        assert runner.invoke(cli, ["check-axioms", str(path)]).exit_code == 3

    def test_unknown_axiom(self):
        """Unknown axiom names are input errors."""
        assert runner.invoke(cli, ["check-axioms", "CHAIN3", "--axiom", "nope"]).exit_code == 3

    def test_ascii_plain_mode(self):
        """NO_COLOR prints a plain table with the axiom symbols."""
        result = runner.invoke(cli, ["check-axioms", "STAR", "--format", "ascii"], env={"NO_COLOR": "1"})
        assert result.exit_code == 1
        assert "(F−)" in result.stdout
        assert "violated" in result.stdout

    def test_svg_rejected(self):
        """svg output is only for grid domains and scenarios."""
        assert runner.invoke(cli, ["check-axioms", "CHAIN3", "--format", "svg"]).exit_code == 3

    def test_out_file(self, tmp_path):
        """--out writes the report instead of printing it."""
        target = tmp_path / "reports" / "chain3.json"
        result = runner.invoke(cli, ["check-axioms", "CHAIN3", "--out", str(target)])
        assert result.exit_code == 0
        assert json.loads(target.read_text(encoding="utf-8"))["command"] == "check-axioms"


class TestCones:
    """Test the cones command."""

    def test_chain3_cones(self):
        """⇑{b} = {b,c} and ⇓{b} = {a,b} on CHAIN3."""
        code, data = run_json(["cones", "CHAIN3", "--region", "b"])
        assert code == 0
        assert data["cone_up"] == ["b", "c"]
        assert data["cone_down"] == ["a", "b"]
        assert data["order"] == "egli-milner"

    def test_unknown_label(self):
        """Labels outside the space are input errors."""
        assert runner.invoke(cli, ["cones", "CHAIN3", "--region", "q"]).exit_code == 3


class TestCover:
    """Test the cover command."""

    def test_vee_not_covered(self):
        """{x} does not cover {z} from below: the path ({y},{z}) escapes, exit 1."""
        code, data = run_json(["cover", "VEE", "--region", "x", "--target", "z"])
        assert code == 1
        assert data["verdict"]["outcome"] == "not_covered"
        assert data["verdict"]["witness"] == [["y"], ["z"]]

    def test_chain3_covered_with_certificate(self):
        """⇓{c} covers {c}, exit 0 with refinement families."""
        code, data = run_json(["cover", "CHAIN3", "--region", "a,b,c", "--target", "c"])
        assert code == 0
        assert data["verdict"]["outcome"] == "covered"
        assert data["verdict"]["certificates"]

    def test_budget_gives_unknown(self):
        """A one-state budget stops the search, exit 2."""
        code, data = run_json(["cover", "CHAIN3", "--region", "a", "--target", "c", "--budget", "1"])
        assert code == 2
        assert data["verdict"]["outcome"] == "unknown"
        assert data["bounds"] == {
            "budget": 1,
            "basis": "all",
            "universe_size": 7,
            "max_path_len": 14,
            "max_refinement_len": 120,
        }

    def test_explicit_bounds_are_reported(self):
        """Explicit options replace the derived bounds in the header."""
        _, data = run_json(
            ["cover", "CHAIN3", "--region", "a,b,c", "--target", "c", "--max-path-len", "3", "--max-refinement-len", "9"]
        )
        assert data["bounds"]["max_path_len"] == 3
        assert data["bounds"]["max_refinement_len"] == 9
        assert data["verdict"]["bounds"]["max_target_path_len"] == 3

    def test_future_direction(self):
        """Cov⁺ is decided on the opposite locale."""
        code, data = run_json(["cover", "CHAIN3", "--region", "a,b,c", "--target", "a", "--direction", "future"])
        assert code == 0
        assert data["verdict"]["direction"] == "future"

    def test_chain_semantics_on_grid(self):
        """On CONE_CUT row 0 covers (2,2) with chains but not with inextendible chains."""
        code, data = run_json(["cover", "CONE_CUT", "--region", "A", "--target", "U", "--semantics", "chain-causal"])
        assert code == 0
        assert data["verdict"]["covered"] is True
        code, data = run_json(["cover", "CONE_CUT", "--region", "A", "--target", "U", "--semantics", "inext-causal"])
        assert code == 1
        assert data["verdict"]["witness"] == ["(2,2)"]

    def test_grid_cells_by_coordinates(self):
        """Grid regions may be written as x:t cells."""
        code, data = run_json(
            ["cover", "MINKOWSKI_PLAIN", "--region", "1:0,2:0,3:0", "--target", "2:2", "--semantics", "chain-chron"]
        )
        assert code == 0
        assert data["verdict"]["mode"] == "chron"

    def test_chain_semantics_need_grid(self):
        """Chain semantics on a space are input errors."""
        args = ["cover", "VEE", "--region", "x", "--target", "z", "--semantics", "chain-causal"]
        assert runner.invoke(cli, args).exit_code == 3

    def test_bad_direction(self):
        """Directions are past or future."""
        args = ["cover", "VEE", "--region", "x", "--target", "z", "--direction", "sideways"]
        assert runner.invoke(cli, args).exit_code == 3


class TestDomain:
    """Test the domain command."""

    def test_chain3_future_domain(self):
        """D⁺({a}) = {a,b,c} on CHAIN3."""
        code, data = run_json(["domain", "CHAIN3", "--region", "a", "--direction", "future", "--semantics", "localic"])
        assert code == 0
        assert data["domain"] == ["a", "b", "c"]
        assert data["partial"] is False

    def test_chain3_file_input(self, chain3_file):
        """Files and library names give the same domain."""
        code, data = run_json(["domain", str(chain3_file), "--region", "a", "--semantics", "localic"])
        assert code == 0
        assert data["domain"] == ["a", "b", "c"]

    def test_empty_region(self):
        """The empty region has an empty domain, exit 0."""
        code, data = run_json(["domain", "CHAIN3", "--region", "", "--semantics", "localic"])
        assert code == 0
        assert data["domain"] == []

    def test_cone_cut_all(self):
        """CONE_CUT shows exactly one strict expected inclusion."""
        code, data = run_json(["domain", "CONE_CUT", "--semantics", "all"])
        assert code == 0
        strict = [i for i in data["report"]["inclusions"] if i["expected"] and i["strict"]]
        assert [(i["left"], i["right"], i["witness"]) for i in strict] == [("inext_causal", "bounded_causal", "(2,2)")]
        assert data["report"]["violations"] == []

    def test_single_semantics(self):
        """One semantics reports one column."""
        code, data = run_json(["domain", "CONE_CUT", "--semantics", "inext-causal"])
        assert code == 0
        assert list(data["report"]["domains"]) == ["inext_causal"]
        assert len(data["report"]["domains"]["inext_causal"]) == 11

    def test_ascii_picture(self):
        """ascii output draws the grid with domain counts."""
        result = runner.invoke(cli, ["domain", "CONE_CUT", "--format", "ascii"])
        assert result.exit_code == 0
        assert "55355\n5###5\nAAAAA\n" in result.stdout

    def test_chain_semantics_need_grid(self):
        """Chain domains on a space are input errors."""
        args = ["domain", "CHAIN3", "--region", "a", "--semantics", "chain-causal"]
        assert runner.invoke(cli, args).exit_code == 3

    def test_region_required_for_spaces(self):
        """Spaces have no stored region A."""
        assert runner.invoke(cli, ["domain", "CHAIN3"]).exit_code == 3


class TestGtop:
    """Test the gtop command."""

    def test_chain3_holds(self):
        """J⁻ satisfies all five axioms on CHAIN3."""
        code, data = run_json(["gtop", "CHAIN3"])
        assert code == 0
        assert [a["axiom"] for a in data["axioms"]] == ["i", "ii", "iii", "i'", "i''"]

    def test_canonical(self):
        """The canonical topology satisfies (i)-(iii)."""
        code, data = run_json(["gtop", "CHAIN3", "--canonical"])
        assert code == 0
        assert data["topology"] == "canonical"
        assert len(data["axioms"]) == 3


class TestPathsRestrict:
    """Test the paths restrict command."""

    def test_vee_restriction(self):
        """({x,y},{x,y,z}) restricted to {z} is ({x,y},{z})."""
        code, data = run_json(["paths", "restrict", "VEE", "--step", "x,y", "--step", "x,y,z", "--to", "z"])
        assert code == 0
        assert data["restricted"] == [["x", "y"], ["z"]]

    def test_star_restriction_fails(self):
        """STAR is not parallel ordered: the future restriction empties step 1, exit 1."""
        args = ["paths", "restrict", "STAR", "--step", "s,m,p", "--step", "m,z,p", "--to", "s", "--direction", "future"]
        code, data = run_json(args)
        assert code == 1
        assert data["restricted"] is None
        assert data["index"] == 1

    def test_invalid_path(self):
        """Unrelated steps are input errors."""
        args = ["paths", "restrict", "CHAIN3", "--step", "c", "--step", "a", "--to", "a"]
        assert runner.invoke(cli, args).exit_code == 3


class TestScenario:
    """Test the scenario command."""

    def test_minkowski_svg_artifact(self, tmp_path):
        """The svg artifact is written as <scenario>.svg."""
        result = runner.invoke(cli, ["scenario", "MINKOWSKI_PLAIN", "--format", "svg", "--out", str(tmp_path)])
        assert result.exit_code == 0
        svg = (tmp_path / "minkowski_plain.svg").read_text(encoding="utf-8")
        assert svg.startswith("<svg")
        assert "<title>MINKOWSKI_PLAIN</title>" in svg

    def test_region_removed_ascii(self):
        """The removed block and the notch at (2,3) show in the picture."""
        result = runner.invoke(cli, ["scenario", "REGION_REMOVED", "--format", "ascii"])
        assert result.exit_code == 0
        assert "55355\n5###5\n5###5\nAAAAA\n" in result.stdout
        assert "MISMATCH" not in result.stdout

    def test_two_slopes_json(self):
        """TWO_SLOPES(1,2) is not parallel ordered and has no localic column."""
        code, data = run_json(["scenario", "TWO_SLOPES(1,2)"])
        assert code == 0
        assert data["parallel"] == "violated"
        assert data["matches_expected"] is True
        assert data["report"]["domains"]["localic"] is None
        assert data["grid"]["down_slope"] == 2

    def test_unknown_scenario(self):
        """Unknown names are input errors."""
        assert runner.invoke(cli, ["scenario", "NOPE"]).exit_code == 3

    def test_scenario_as_input_elsewhere(self):
        """Scenario names work as inputs to other commands."""
        code, data = run_json(["cones", "MINKOWSKI_PLAIN", "--region", "2:0"])
        assert code == 0
        assert "(2,2)" in data["cone_up"]


class TestMain:
    """Test the console-script entry point."""

    def test_version(self):
        """version prints the settings."""
        result = runner.invoke(cli, ["version"])
        assert result.exit_code == 0
        assert "Ordered Locale Lab" in result.stdout
        assert "OLAB_BUDGET" in result.stdout

    def test_usage_error_is_input_error(self, monkeypatch):
        """A missing argument exits with the input-error code."""
        monkeypatch.setattr(sys, "argv", ["olab", "check-axioms"])
        with pytest.raises(SystemExit) as exc:
            main()
        assert exc.value.code == 3

    def test_exit_code_passes_through(self, monkeypatch):
        """Command exit codes reach the process."""
        monkeypatch.setattr(sys, "argv", ["olab", "check-axioms", "STAR", "--axiom", "F-"])
        with pytest.raises(SystemExit) as exc:
            main()
        assert exc.value.code == 1
