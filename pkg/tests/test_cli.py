import io
import json
import shutil
import subprocess

import pytest

from gradimpact.cli import main
from gradimpact.formats import serialize
from gradimpact.fixtures import selfloop_af, showcase_af

TRIANGLE_APX = "arg(a1).\narg(a2).\narg(a3).\natt(a1,a2).\natt(a2,a3).\natt(a1,a3).\n"


@pytest.fixture()
def showcase_tgf(tmp_path):
    path = tmp_path / "showcase.tgf"
    path.write_text(serialize(showcase_af(), "tgf"), encoding="utf-8")
    return str(path)


@pytest.fixture()
def triangle_apx(tmp_path):
    path = tmp_path / "triangle.apx"
    path.write_text(TRIANGLE_APX, encoding="utf-8")
    return str(path)


def test_degrees_emits_deterministic_json(showcase_tgf, capsys):
    argv = ["degrees", showcase_tgf, "--semantics", "hbs"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    payload = json.loads(first)
    assert payload["semantics"] == "hbs"
    assert payload["params"]["tolerance"] == 1e-12
    assert payload["degrees"]["a4"] == pytest.approx(0.389826, abs=1e-6)
    assert payload["degrees"]["a6"] == 1.0
    assert main(argv) == 0
    assert capsys.readouterr().out == first


def test_degrees_reports_counting_parameters(triangle_apx, capsys):
    assert main(["degrees", triangle_apx, "--semantics", "cs"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["params"] == {"alpha": 0.98, "norm": 2.0}
    assert payload["degrees"]["a3"] == pytest.approx(0.2601, abs=1e-4)


def test_stdin_requires_an_explicit_format(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO("a\n#\n"))
    assert main(["degrees", "-", "--semantics", "hbs"]) == 2
    assert capsys.readouterr().err.startswith("error:")
    monkeypatch.setattr("sys.stdin", io.StringIO("a\nb\n#\na b\n"))
    assert main(["degrees", "-", "--format", "tgf", "--semantics", "hbs"]) == 0
    assert json.loads(capsys.readouterr().out)["degrees"]["b"] == 0.5


def test_missing_file_exits_2(tmp_path, capsys):
    assert main(["degrees", str(tmp_path / "nope.tgf"), "--semantics", "hbs"]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_unparsable_input_exits_2(tmp_path, capsys):
    path = tmp_path / "broken.tgf"
    path.write_text("a\n#\na b c\n", encoding="utf-8")
    assert main(["degrees", str(path), "--semantics", "hbs"]) == 2
    err = capsys.readouterr().err
    assert err.startswith("error:") and "3" in err


def test_unknown_extension_needs_a_format_flag(tmp_path, capsys):
    path = tmp_path / "framework.txt"
    path.write_text("a\n#\n", encoding="utf-8")
    assert main(["degrees", str(path), "--semantics", "hbs"]) == 2
    assert "--format" in capsys.readouterr().err
    assert main(["degrees", str(path), "--format", "tgf", "--semantics", "hbs"]) == 0
    capsys.readouterr()


def test_bad_flag_values_exit_through_argparse(showcase_tgf, capsys):
    with pytest.raises(SystemExit) as exit_info:
        main(["degrees", showcase_tgf, "--semantics", "median"])
    assert exit_info.value.code == 2
    capsys.readouterr()


def test_impact_query(showcase_tgf, capsys):
    rc = main(
        [
            "impact", showcase_tgf, "--semantics", "hbs",
            "--measure", "dv", "--set", "a8,a10", "--target", "a4",
        ]
    )
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["subject"] == ["a10", "a8"]
    assert payload["value"] == pytest.approx(-0.1745, abs=2e-3)
    assert payload["polarity"] == "negative"
    assert payload["converged"] is True


def test_impact_of_the_empty_set_is_neutral(showcase_tgf, capsys):
    for measure in ("dv", "dv-original", "si"):
        rc = main(
            [
                "impact", showcase_tgf, "--semantics", "max",
                "--measure", measure, "--set", "", "--target", "a4",
            ]
        )
        assert rc == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["value"] == 0.0
        assert payload["polarity"] == "neutral"


def test_impact_with_unknown_target_exits_4(showcase_tgf, capsys):
    rc = main(
        [
            "impact", showcase_tgf, "--semantics", "hbs",
            "--measure", "dv", "--set", "a1", "--target", "zz",
        ]
    )
    assert rc == 4
    assert capsys.readouterr().err.startswith("error:")


def test_tripped_series_guard_exits_5(tmp_path, capsys):
    path = tmp_path / "loop.tgf"
    path.write_text(serialize(selfloop_af(), "tgf"), encoding="utf-8")
    rc = main(
        [
            "impact", str(path), "--semantics", "hbs", "--measure", "si",
            "--set", "a", "--target", "a", "--guard", "0.1",
        ]
    )
    assert rc == 5
    assert capsys.readouterr().err.startswith("error:")


def test_unsafe_norm_override_exits_5(tmp_path, capsys):
    path = tmp_path / "chain.tgf"
    path.write_text("a\nb\n#\na b\n", encoding="utf-8")
    rc = main(["degrees", str(path), "--semantics", "cs", "--norm", "0.5"])
    assert rc == 5
    assert capsys.readouterr().err.startswith("error:")


def test_exhausted_iteration_budget_exits_3(tmp_path, capsys):
    path = tmp_path / "pair.tgf"
    path.write_text("a\nb\n#\na b\nb a\n", encoding="utf-8")
    rc = main(
        ["degrees", str(path), "--semantics", "hbs", "--max-iterations", "1"]
    )
    assert rc == 3
    assert capsys.readouterr().err.startswith("error:")


def test_shapley_payload(triangle_apx, capsys):
    assert main(["shapley", triangle_apx, "--semantics", "cs"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["semantics"] == "cs"
    assert payload["mode"] == "exact"
    triples = [(v["source"], v["target"]) for v in payload["values"]]
    assert triples == [("a1", "a2"), ("a1", "a3"), ("a2", "a3")]
    values = {(v["source"], v["target"]): v["s"] for v in payload["values"]}
    assert values[("a1", "a2")] == pytest.approx(0.49, abs=5e-3)
    assert values[("a2", "a3")] == pytest.approx(-0.11, abs=5e-3)
    assert values[("a1", "a3")] == pytest.approx(0.85, abs=5e-3)


def test_audit_json_report(capsys):
    rc = main(["audit", "--graphs", "12", "--seed", "5", "--report", "json"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["matrix"]) == 9 * 2 * 4
    assert payload["implication_issues"] == []
    assert payload["config"]["graph_count"] == 12


def test_audit_text_report_draws_a_grid(capsys):
    rc = main(
        [
            "audit", "--graphs", "4", "--report", "text",
            "--measures", "si", "--semantics", "hbs",
        ]
    )
    assert rc == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0].split() == ["principle", "si*hbs"]
    assert "✗" not in out


def test_audit_expect_paper_flags_a_sparse_run(capsys):
    rc = main(["audit", "--expect-paper", "--no-fixtures", "--graphs", "0"])
    assert rc == 6
    captured = capsys.readouterr()
    assert "pattern mismatch: balanced under dv*hbs" in captured.err
    assert "expected counterexample" in captured.err


def test_annotate_dot(showcase_tgf, capsys):
    assert main(["annotate", showcase_tgf, "--semantics", "hbs"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("digraph af {")
    assert '"a4" [label="a4\\n0.390"];' in out
    assert '"a3" -> "a4" [label="0.178"];' in out


def test_annotate_json(triangle_apx, capsys):
    rc = main(
        ["annotate", triangle_apx, "--format", "json", "--semantics", "cs"]
    )
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["degrees"]["a1"] == pytest.approx(1.0)
    assert ["a2", "a3", pytest.approx(-0.11, abs=5e-3)] in payload["intensities"]


def test_annotate_empty_framework_skips_scoring(tmp_path, capsys):
    path = tmp_path / "empty.tgf"
    path.write_text("#\n", encoding="utf-8")
    assert main(["annotate", str(path), "--semantics", "hbs"]) == 0
    assert capsys.readouterr().out == "digraph af {\n}\n"


def test_out_flag_writes_a_file_instead_of_stdout(showcase_tgf, tmp_path, capsys):
    target = tmp_path / "scores.json"
    rc = main(
        ["degrees", showcase_tgf, "--semantics", "car", "--out", str(target)]
    )
    assert rc == 0
    assert capsys.readouterr().out == ""
    payload = json.loads(target.read_text(encoding="utf-8"))
    assert payload["degrees"]["a4"] == pytest.approx(0.230054, abs=1e-6)


def test_console_script_is_installed(showcase_tgf):
    exe = shutil.which("gradimpact")
    assert exe is not None
    done = subprocess.run(
        [exe, "degrees", showcase_tgf, "--semantics", "hbs"],
        capture_output=True, text=True, check=False,
    )
    assert done.returncode == 0
    assert json.loads(done.stdout)["semantics"] == "hbs"
