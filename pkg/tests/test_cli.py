"""Tests for the idforge command line."""

from __future__ import annotations

import json

import pytest

from cli.main import EXIT_FAIL, EXIT_OK, EXIT_USAGE, build_grid, main, parse_args
from config.settings import settings
from verifier.suite import expand_cells


class TestList:
    def test_catalog_lines(self, capsys):
        assert main(["list"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 29
        assert lines[0].split("\t")[:2] == ["chu_vandermonde", "n>=0"]
        flagged = [line for line in lines if line.startswith("gould_variation\t")]
        assert flagged[0].endswith("\tknown_discrepant")

    def test_stable(self, capsys):
        main(["list"])
        first = capsys.readouterr().out
        main(["list"])
        assert capsys.readouterr().out == first


class TestParsing:
    def test_verify_grid(self):
        config = parse_args(["verify", "--identity", "jensen", "--param", "n=0..2"])
        cells = expand_cells(build_grid(config))
        assert [p["n"] for _, p in cells] == [0, 1, 2]

    def test_defaults_and_cap(self):
        config = parse_args(["verify", "--identity", "chu89", "--max-n", "1"])
        cells = expand_cells(build_grid(config))
        assert cells
        assert all(sum(p["nvec"]) <= 1 and p["s"] <= 1 for _, p in cells)

    def test_all(self):
        config = parse_args(["verify", "--all"])
        assert len(config.identities) == 29

    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["verify", "--identity", "nope"],
            ["verify", "--identity", "jensen", "--param", "n=3..1"],
            ["verify", "--identity", "jensen", "--param", "n=abc"],
            ["verify", "--identity", "jensen", "--param", "s=1"],
            ["verify", "--identity", "jensen", "--param", "n=(1,1)"],
            ["verify", "--identity", "jensen", "--param", "n=1", "--param", "n=2"],
            ["verify", "--identity", "jensen", "--trials", "0"],
            ["verify", "--identity", "jensen", "--jobs", "0"],
            ["verify", "--identity", "cv_multi", "--param", "nvec=2"],
            ["eval", "--identity", "jensen", "--side", "lhs", "--param", "n=0..2"],
            ["eval", "--identity", "jensen", "--side", "middle", "--param", "n=1"],
            ["eval", "--identity", "jensen", "--side", "lhs"],
            ["eval", "--identity", "jensen", "--side", "lhs", "--param", "n=1",
             "--assign", "x=1"],
            ["eval", "--identity", "jensen", "--side", "lhs", "--param", "n=1",
             "--assign", "w=1"],
            ["eval", "--identity", "jensen", "--side", "lhs", "--param", "n=1",
             "--assign", "x=1/0"],
        ],
    )
    def test_usage_errors(self, argv, capsys):
        assert main(argv) == EXIT_USAGE
        assert capsys.readouterr().err.startswith("idforge: error: ")


class TestEval:
    @pytest.mark.parametrize(
        "argv, expected",
        [
            (["--identity", "jensen", "--side", "lhs", "--param", "n=1"], "x + y + z"),
            (["--identity", "jensen", "--side", "rhs", "--param", "n=0"], "1"),
            (
                ["--identity", "simons", "--side", "rhs", "--param", "n=2", "--assign", "x=1"],
                "13",
            ),
            (
                ["--identity", "chu89", "--side", "lhs", "--param", "nvec=(1,0)",
                 "--param", "s=1"],
                "x1 + z1",
            ),
            (
                ["--identity", "abel", "--side", "lhs", "--param", "n=1",
                 "--assign", "x=1/2", "--assign", "y=-1/3", "--assign", "z=7"],
                "1/6",
            ),
        ],
    )
    def test_output(self, argv, expected, capsys):
        assert main(["eval", *argv]) == EXIT_OK
        assert capsys.readouterr().out == expected + "\n"


class TestVerify:
    def test_all_small_cells_pass(self, capsys):
        assert main(["verify", "--all", "--max-n", "2", "--format", "text"]) == EXIT_OK
        out = capsys.readouterr().out
        passed, total = out.splitlines()[-1].split()[0].split("/")
        assert passed == total

    def test_known_discrepancy_is_not_a_failure(self, capsys):
        argv = ["verify", "--identity", "gould_variation", "--param", "n=1", "--no-timing"]
        assert main(argv) == EXIT_OK
        cells = json.loads(capsys.readouterr().out)["cells"]
        assert cells[0]["status"] == "known_discrepant_confirmed"

    def test_mutation_fails(self, capsys):
        argv = ["verify", "--identity", "jensen", "--param", "n=2",
                "--mutate", "drop_last_term"]
        assert main(argv) == EXIT_FAIL
        assert json.loads(capsys.readouterr().out)["cells"][0]["status"] == "fail"

    def test_report_is_byte_identical(self, tmp_path):
        argv = ["verify", "--identity", "simons", "--identity", "ks2", "--mode", "numeric",
                "--seed", "4", "--max-n", "2", "--no-timing"]
        paths = [tmp_path / "a.json", tmp_path / "b.json", tmp_path / "c.json"]
        assert main([*argv, "--output", str(paths[0])]) == EXIT_OK
        assert main([*argv, "--output", str(paths[1])]) == EXIT_OK
        assert main([*argv, "--jobs", "2", "--output", str(paths[2])]) == EXIT_OK
        first = paths[0].read_bytes()
        assert first == paths[1].read_bytes() == paths[2].read_bytes()
        assert json.loads(first)["seed"] == 4

    def test_tsv(self, capsys):
        argv = ["verify", "--identity", "jensen", "--param", "n=1", "--format", "tsv"]
        assert main(argv) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].startswith("identity\tparams\tmode\tstatus")
        assert len(lines) == 2

    def test_unwritable_output(self, tmp_path, capsys):
        blocker = tmp_path / "file"
        blocker.write_text("", encoding="utf-8")
        argv = ["verify", "--identity", "jensen", "--param", "n=1",
                "--output", str(blocker / "report.json")]
        assert main(argv) == EXIT_USAGE
        assert "cannot write" in capsys.readouterr().err

    def test_term_budget_aborts(self, monkeypatch, capsys):
        monkeypatch.setattr(settings, "term_budget", 3)
        assert main(["verify", "--identity", "jensen", "--param", "n=4"]) == EXIT_FAIL
        assert json.loads(capsys.readouterr().out)["cells"][0]["status"] == "aborted"

    def test_empty_selection(self, capsys):
        assert main(["verify", "--no-timing"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["cells"] == []


@pytest.fixture(scope="module")
def default_grid_reports(tmp_path_factory):
    """Exit codes and JSON bytes of ``verify --all`` on the default grid."""
    folder = tmp_path_factory.mktemp("reports")
    runs = {
        "symbolic": [],
        "parallel": ["--jobs", "2"],
        "numeric": ["--mode", "numeric"],
    }
    codes, reports = {}, {}
    for name, extra in runs.items():
        path = folder / f"{name}.json"
        argv = ["verify", "--all", "--seed", "5", "--no-timing", *extra, "--output", str(path)]
        codes[name] = main(argv)
        reports[name] = path.read_bytes()
    return codes, reports


def _verdicts(report: bytes) -> list[tuple[str, str, str]]:
    return [(c["identity"], c["params"], c["status"]) for c in json.loads(report)["cells"]]


class TestDefaultGrid:
    def test_every_cell_passes(self, default_grid_reports):
        codes, reports = default_grid_reports
        assert codes == {"symbolic": EXIT_OK, "parallel": EXIT_OK, "numeric": EXIT_OK}
        cells = json.loads(reports["symbolic"])["cells"]
        config = parse_args(["verify", "--all"])
        assert len(cells) == len(expand_cells(build_grid(config)))
        assert {c["status"] for c in cells} == {"pass", "known_discrepant_confirmed"}

    def test_vector_grid_is_complete(self, default_grid_reports):
        _, reports = default_grid_reports
        cells = [c for c in json.loads(reports["symbolic"])["cells"] if c["identity"] == "cv_multi"]
        assert len(cells) == 55
        assert {"nvec=(0,4)", "nvec=(1,3)", "nvec=(0,1,0)", "nvec=(1,1,2)"} <= {
            c["params"] for c in cells
        }

    def test_diagonal_munarini_cells(self, default_grid_reports):
        _, reports = default_grid_reports
        params = {c["params"] for c in json.loads(reports["symbolic"])["cells"]
                  if c["identity"] == "multi_munarini"}
        assert "nvec=(2,2), alpha=4, beta=4" in params
        assert "nvec=(1,1,2), alpha=4, beta=4" in params

    def test_numeric_agrees_with_symbolic_on_every_cell(self, default_grid_reports):
        _, reports = default_grid_reports
        assert _verdicts(reports["numeric"]) == _verdicts(reports["symbolic"])

    def test_parallel_report_is_byte_identical(self, default_grid_reports):
        _, reports = default_grid_reports
        assert reports["parallel"] == reports["symbolic"]
