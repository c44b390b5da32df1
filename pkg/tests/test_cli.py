import csv
import json

import pytest

from qvaluation.cli import build_parser, main
from tests.conftest import write_json


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _problem(err):
    return json.loads(err)


class TestDemo:
    def test_all_checks_pass(self, capsys):
        code, out, _ = _run(capsys, "demo-spin32")
        report = json.loads(out)
        assert code == 0
        assert report["passed"] is True
        assert all(check["passed"] for check in report["checks"])

    def test_sections(self, capsys):
        _, out, _ = _run(capsys, "demo-spin32")
        sections = json.loads(out)["sections"]
        kernel = sections["linear_systems"]["kernel"]
        assert kernel["residual"] <= 1e-9
        assert kernel["coefficients"]["cols"] == 3
        assert sections["overdetermination"] == {
            "n": 4,
            "m": 1,
            "k": 3,
            "overdetermined_R": True,
            "overdetermined_K": True,
        }
        assert sections["valuations"]["|X+3/2>"] == {"SV": "gap", "QL": "false"}
        assert sections["probabilities"]["|X+3/2>"]["probability"] == pytest.approx(0.125)
        assert sections["excluded_middle"]["P | !P"] == "true"
        assert sections["meet_rule"]["Q & P"] == "gap"
        assert sections["distributivity"]["holds"] is False

    def test_table_format(self, capsys):
        code, out, _ = _run(capsys, "demo-spin32", "--format", "table")
        assert code == 0
        assert any(line.startswith("passed") and line.rstrip().endswith("true") for line in out.splitlines())


class TestFixturesExport:
    def test_writes_documents(self, capsys, tmp_path):
        out_dir = tmp_path / "spin32"
        code, out, _ = _run(capsys, "fixtures", "export", "--out", str(out_dir))
        summary = json.loads(out)
        assert code == 0
        assert "atoms.json" in summary["files"]
        assert sorted(path.name for path in out_dir.iterdir()) == sorted(summary["files"])
        manifest = json.loads((out_dir / "atoms.json").read_text())
        assert manifest == {"atoms": {"P": "projector_Y32.json", "Q": "projector_X32.json"}}

    def test_action_is_required(self, capsys):
        code, _, err = _run(capsys, "fixtures")
        assert code == 2
        assert "ACTION" in err or "required" in err


class TestValuate:
    @pytest.mark.parametrize(
        "ket, semantics, truth",
        [
            ("ket_X32", "sv", "gap"),
            ("ket_Y32", "sv", "true"),
            ("ket_Y12", "sv", "false"),
            ("ket_X32", "ql", "false"),
        ],
    )
    def test_fixture_kets(self, capsys, fixture_dir, ket, semantics, truth):
        code, out, _ = _run(
            capsys,
            "valuate",
            "--state",
            str(fixture_dir / f"{ket}.json"),
            "--projector",
            str(fixture_dir / "projector_Y32.json"),
            "--semantics",
            semantics,
        )
        report = json.loads(out)
        assert code == 0
        assert report["truth"] == truth
        assert report["semantics"] == semantics.upper()
        assert report["consistent"] is True
        assert report["config"]["semantics"] == semantics

    def test_linear_system_method(self, capsys, fixture_dir):
        code, out, _ = _run(
            capsys,
            "valuate",
            "--state",
            str(fixture_dir / "ket_X32.json"),
            "--projector",
            str(fixture_dir / "projector_Y32.json"),
            "--method",
            "linsys",
        )
        report = json.loads(out)
        assert code == 0
        assert report["truth"] == "gap"
        assert report["method"] == "linsys"

    def test_table_format(self, capsys, fixture_dir):
        _, out, _ = _run(
            capsys,
            "valuate",
            "--state",
            str(fixture_dir / "ket_X32.json"),
            "--projector",
            str(fixture_dir / "projector_Y32.json"),
            "--format",
            "table",
        )
        rows = dict(line.split(None, 1) for line in out.splitlines())
        assert rows["truth"] == "gap"
        assert rows["config.format"] == "table"

    def test_missing_data_key(self, capsys, fixture_dir, tmp_path):
        broken = write_json(tmp_path / "broken.json", {"rows": 4, "cols": 4})
        code, out, err = _run(
            capsys,
            "valuate",
            "--state",
            str(fixture_dir / "ket_X32.json"),
            "--projector",
            str(broken),
        )
        problem = _problem(err)
        assert code == 2
        assert out == ""
        assert problem["type"] == "payload_error"
        assert problem["field"] == "data"
        assert problem["exit_code"] == 2

    def test_invalid_json(self, capsys, fixture_dir, tmp_path):
        broken = tmp_path / "broken.json"
        broken.write_text('{"rows": 4,')
        code, _, err = _run(
            capsys,
            "valuate",
            "--state",
            str(broken),
            "--projector",
            str(fixture_dir / "projector_Y32.json"),
        )
        assert code == 2
        assert "not valid JSON" in _problem(err)["title"]

    def test_missing_file(self, capsys, fixture_dir, tmp_path):
        code, _, err = _run(
            capsys,
            "valuate",
            "--state",
            str(tmp_path / "absent.json"),
            "--projector",
            str(fixture_dir / "projector_Y32.json"),
        )
        assert code == 2
        assert _problem(err)["type"] == "payload_error"

    def test_non_unit_state(self, capsys, fixture_dir, tmp_path):
        state = write_json(
            tmp_path / "state.json",
            {"rows": 4, "cols": 1, "data": [[1, 0], [1, 0], [0, 0], [0, 0]]},
        )
        code, _, err = _run(
            capsys,
            "valuate",
            "--state",
            str(state),
            "--projector",
            str(fixture_dir / "projector_Y32.json"),
        )
        assert code == 2
        assert _problem(err)["type"] == "invalid_state_error"

    def test_non_projector(self, capsys, fixture_dir, tmp_path):
        matrix = write_json(
            tmp_path / "matrix.json",
            {"rows": 2, "cols": 2, "data": [[1, 0], [1, 0], [0, 0], [0, 0]]},
        )
        state = write_json(tmp_path / "state.json", {"rows": 2, "cols": 1, "data": [[1, 0], [0, 0]]})
        code, _, err = _run(capsys, "valuate", "--state", str(state), "--projector", str(matrix))
        assert code == 2
        assert _problem(err)["type"] == "invalid_projector_error"

    def test_dimension_mismatch(self, capsys, fixture_dir, tmp_path):
        state = write_json(tmp_path / "state.json", {"rows": 2, "cols": 1, "data": [[1, 0], [0, 0]]})
        code, _, err = _run(
            capsys,
            "valuate",
            "--state",
            str(state),
            "--projector",
            str(fixture_dir / "projector_Y32.json"),
        )
        assert code == 2
        assert _problem(err)["type"] == "dimension_mismatch_error"


class TestSample:
    def test_every_state_is_a_gap(self, capsys):
        code, out, _ = _run(capsys, "sample", "--n", "4", "--rank", "1", "--trials", "1000", "--seed", "7")
        report = json.loads(out)
        assert code == 0
        assert report["gap_fraction"] == 1.0
        assert report["counts"] == {"in_range": 0, "in_kernel": 0, "gap": 1000}
        assert report["seed"] == 7

    def test_deterministic_output(self, capsys):
        argv = ("sample", "--n", "3", "--rank", "2", "--trials", "200", "--seed", "11")
        _, first, _ = _run(capsys, *argv)
        _, second, _ = _run(capsys, *argv)
        assert first == second

    def test_workers_do_not_change_output(self, capsys):
        argv = ("sample", "--n", "4", "--trials", "300", "--seed", "3")
        _, serial, _ = _run(capsys, *argv)
        _, threaded, _ = _run(capsys, *argv, "--workers", "4")
        assert json.loads(serial)["counts"] == json.loads(threaded)["counts"]

    @pytest.mark.parametrize("rank", ["0", "4"])
    def test_trivial_rank(self, capsys, rank):
        code, out, err = _run(capsys, "sample", "--n", "4", "--rank", rank, "--trials", "10")
        assert code == 2
        assert out == ""
        assert _problem(err)["type"] == "invalid_rank_error"

    def test_sweep_with_csv(self, capsys, tmp_path):
        path = tmp_path / "sweep.csv"
        code, out, _ = _run(capsys, "sample", "--n", "2", "3", "8", "--trials", "100", "--seed", "1", "--csv", str(path))
        report = json.loads(out)
        assert code == 0
        assert [entry["dimension"] for entry in report["sweep"]] == [2, 3, 8]
        with path.open(newline="") as handle:
            rows = list(csv.DictReader(handle))
        assert [row["dimension"] for row in rows] == ["2", "3", "8"]
        assert all(row["gap"] == "100" for row in rows)

    def test_sweep_table(self, capsys):
        code, out, _ = _run(capsys, "sample", "--n", "2", "3", "--trials", "20", "--format", "table")
        lines = out.splitlines()
        assert code == 0
        assert lines[0].split() == ["dimension", "rank", "trials", "in_range", "in_kernel", "gap", "gap_fraction"]
        assert len(lines) == 3

    def test_dimension_below_two(self, capsys):
        code, _, _ = _run(capsys, "sample", "--n", "1")
        assert code == 2


class TestLogic:
    FORMULAS = [
        ("P | !P", "P | !P", "true"),
        ("P & !P", "P & !P", "false"),
        ("Q & (P | !P)", "Q & (P | !P)", "true"),
        ("(Q & P) | (Q & !P)", "Q & P | Q & !P", "false"),
    ]

    @pytest.mark.parametrize("formula, canonical, truth", FORMULAS)
    def test_default_atoms(self, capsys, fixture_dir, formula, canonical, truth):
        code, out, _ = _run(capsys, "logic", formula, "--state", str(fixture_dir / "ket_X32.json"))
        report = json.loads(out)
        assert code == 0
        assert report["formula"] == canonical
        assert report["truth"] == truth
        assert report["state"] == "|X+3/2>"

    @pytest.mark.parametrize("formula, canonical, truth", FORMULAS)
    def test_atom_manifest(self, capsys, fixture_dir, formula, canonical, truth):
        code, out, _ = _run(
            capsys,
            "logic",
            formula,
            "--state",
            str(fixture_dir / "ket_X32.json"),
            "--atoms",
            str(fixture_dir / "atoms.json"),
        )
        assert code == 0
        assert json.loads(out)["truth"] == truth

    def test_gap_at_atom(self, capsys, fixture_dir):
        _, out, _ = _run(capsys, "logic", "P", "--state", str(fixture_dir / "ket_X32.json"))
        report = json.loads(out)
        assert report["truth"] == "gap"
        assert report["subspace_dim"] == 1

    def test_unknown_atom(self, capsys, fixture_dir):
        code, _, err = _run(capsys, "logic", "P & R", "--state", str(fixture_dir / "ket_X32.json"))
        assert code == 2
        assert _problem(err)["type"] == "unknown_atom_error"

    def test_syntax_error(self, capsys, fixture_dir):
        code, _, err = _run(capsys, "logic", "P &", "--state", str(fixture_dir / "ket_X32.json"))
        assert code == 2
        assert _problem(err)["type"] == "formula_syntax_error"

    def test_bad_manifest(self, capsys, fixture_dir, tmp_path):
        manifest = write_json(tmp_path / "atoms.json", {"atoms": {"P": 3}})
        code, _, err = _run(
            capsys,
            "logic",
            "P",
            "--state",
            str(fixture_dir / "ket_X32.json"),
            "--atoms",
            str(manifest),
        )
        problem = _problem(err)
        assert code == 2
        assert problem["field"] == "atoms.P"


def test_subcommand_is_required(capsys):
    assert main([]) == 2


@pytest.mark.parametrize("flag, value", [("--tol-residual", "0"), ("--tol-rank", "2"), ("--seed", "-1")])
def test_rejects_bad_settings(capsys, flag, value):
    assert main(["demo-spin32", flag, value]) == 2


def test_parser_lists_every_command():
    parser = build_parser()
    help_text = parser.format_help()
    for command in ("valuate", "demo-spin32", "sample", "logic", "fixtures"):
        assert command in help_text
