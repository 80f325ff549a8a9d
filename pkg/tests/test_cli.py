import json

import pytest

from clopen import ring as R
from clopen.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def json_lines(out):
    return [json.loads(line) for line in out.strip().splitlines()]


class TestRingCommands:
    def test_idempotents(self, capsys):
        code, out, _ = run(capsys, "ring", "idempotents", "Z/12")
        assert code == 0
        assert json.loads(out) == {
            "ring": "Z/12", "idempotents": ["0", "1", "4", "9"],
            "primitive": ["4", "9"]}

    def test_decompose_schema(self, capsys):
        code, out, _ = run(capsys, "ring", "decompose", "Z/12")
        assert code == 0
        body = json.loads(out)
        assert body["factors"] == ["Z/3", "Z/4"]
        assert body["iso_verified"] is True

    def test_spec(self, capsys):
        code, out, _ = run(capsys, "ring", "spec", "Z/360")
        assert code == 0
        assert json.loads(out)["points"] == ["(2)", "(3)", "(5)"]

    def test_suite_line_delimited(self, capsys):
        code, out, _ = run(capsys, "ring", "suite", "Z/12")
        assert code == 0
        lines = json_lines(out)
        assert len(lines) > 3
        assert all(line["pass"] for line in lines)

    def test_table_descriptor(self, capsys, table_file):
        path = table_file(R.Zmod(6))
        code, out, _ = run(capsys, "ring", "idempotents", f"table:{path}")
        assert code == 0
        assert len(json.loads(out)["idempotents"]) == 4

    def test_parse_error_exit_2(self, capsys):
        code, _, err = run(capsys, "ring", "idempotents", "Q/3")
        assert code == 2
        assert json.loads(err)["kind"] == "invalid-input"


class TestSpaceCommands:
    @pytest.fixture
    def space_file(self, tmp_path):
        path = tmp_path / "space.json"
        path.write_text(json.dumps(
            {"n": 4, "subbasis": [[0], [1], [0, 1, 2], [0, 1, 3]]}))
        return str(path)

    def test_components(self, capsys, space_file):
        code, out, _ = run(capsys, "space", "components", space_file)
        assert code == 0
        assert json.loads(out)["components"] == [[0, 1, 2, 3]]

    def test_stone(self, capsys, space_file):
        code, out, _ = run(capsys, "space", "stone", space_file)
        assert code == 0
        assert json.loads(out)["homeomorphism"] is True

    def test_suite(self, capsys, space_file):
        code, out, _ = run(capsys, "space", "suite", space_file)
        assert code == 0
        assert all(line["pass"] for line in json_lines(out))

    def test_dot(self, capsys, space_file):
        code, out, _ = run(capsys, "space", "dot", space_file)
        assert code == 0
        assert out.count("->") == 4
        assert "cluster_0" in out

    def test_missing_file_exit_2(self, capsys):
        code, _, err = run(capsys, "space", "components", "/nonexistent.json")
        assert code == 2

    def test_pretty_flag(self, capsys, space_file):
        code, out, _ = run(capsys, "space", "components", space_file, "--pretty")
        assert code == 0
        assert out.startswith("{\n")


class TestOtherCommands:
    def test_qspec(self, capsys):
        code, out, _ = run(capsys, "qspec", "Z/4")
        assert code == 0
        body = json.loads(out)
        assert body["sober"] is False
        assert body["points"] == ["(2)", "(0)"]

    def test_proj_witness(self, capsys):
        code, out, _ = run(capsys, "proj", "witness", "--char", "3")
        assert code == 0
        assert json.loads(out)["verdict"] == "accept"

    def test_proj_witness_custom_pair(self, capsys):
        code, out, _ = run(capsys, "proj", "witness", "--char", "5",
                           "--f", "x-y", "--g", "x-y")
        assert code == 0
        assert json.loads(out)["verdict"] == "reject"

    def test_proj_lift(self, capsys):
        code, out, _ = run(capsys, "proj", "lift", "--ring", "Z/12", "--dim", "1")
        assert code == 0
        assert all(line["pass"] for line in json_lines(out))

    def test_verify_small(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-points", "2", "--max-n", "30",
                           "--fiber-samples", "40")
        assert code == 0
        lines = json_lines(out)
        assert lines[-1]["verify"] == "pass"

    def test_verify_resource_guard_exit_3(self, capsys):
        code, _, err = run(capsys, "verify", "--max-points", "6")
        assert code == 3
        assert json.loads(err)["kind"] == "resource-bound"

    def test_usage_error_exit_2(self, capsys):
        code, _, _ = run(capsys, "ring")
        assert code == 2

    def test_help_exits_zero(self, capsys):
        code, _, _ = run(capsys, "--help")
        assert code == 0

    def test_failing_suite_exit_1(self, capsys, monkeypatch):
        from clopen import handlers
        from clopen.models import CheckReportOut, SuiteResponse

        def broken(req):
            return SuiteResponse(passed=False, reports=[CheckReportOut(
                check="stub", instance="stub", passed=False, witness=None)])

        monkeypatch.setattr(handlers, "ring_suite", broken)
        code, out, _ = run(capsys, "ring", "suite", "Z/12")
        assert code == 1
        assert json_lines(out)[0]["pass"] is False

    def test_falsified_invariant_exit_1(self, capsys, monkeypatch):
        from clopen import handlers
        from clopen.errors import FalsifiedInvariantError

        def exploding(req):
            raise FalsifiedInvariantError("stub failure", witness={"n": 1})

        monkeypatch.setattr(handlers, "qspec", exploding)
        code, _, err = run(capsys, "qspec", "Z/4")
        assert code == 1
        assert json.loads(err)["kind"] == "falsified-invariant"
