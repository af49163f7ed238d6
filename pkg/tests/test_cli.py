import json

import pytest

from clarifystl.cli import main
from clarifystl.dataset import DatasetRecord, write_records
from clarifystl.traces import Trace, trace_to_record
from test_clarify import FINAL_FORMULA, ORIGINAL, worked_example_fixture


@pytest.fixture()
def fixture_path(tmp_path):
    path = tmp_path / "session.fixture"
    lines = []
    fixture = worked_example_fixture()
    for (tag, rnd), replies in fixture.entries.items():
        for reply in replies:
            lines.append(json.dumps({"tag": tag, "round": rnd, "reply": reply}))
    # scripted prompt-detector verdicts for the two-stage run
    lines.append(json.dumps({"tag": "detect_vagueness", "round": 0, "reply": json.dumps(
        {"defective": True, "types": ["Numerical"], "rationale": "no decrease amount"})}))
    lines.append(json.dumps({"tag": "detect_vagueness", "round": 1, "reply": json.dumps(
        {"defective": False, "types": []})}))
    lines.append(json.dumps({"tag": "detect_ambiguity", "round": 0, "reply": json.dumps(
        {"defective": True, "types": ["Semantic"]})}))
    lines.append(json.dumps({"tag": "detect_ambiguity", "round": 1, "reply": json.dumps(
        {"defective": False, "types": []})}))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return str(path)


class TestParseCommand:
    def test_canonical_output(self, capsys):
        code = main(["parse", "G[0,12]((speed > 45) -> F[1,4](rpm < 2700))"])
        assert code == 0
        assert capsys.readouterr().out.strip() == "G[0,12](speed > 45 -> F[1,4](rpm < 2700))"

    def test_interval_error_exit_one(self, capsys):
        code = main(["parse", "G[5,2](x>0)"])
        assert code == 1
        err = capsys.readouterr().err
        assert "lower bound" in err

    def test_unknown_flag_exits_two(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["parse", "--bogus", "x > 1"])
        assert excinfo.value.code == 2

    def test_unknown_command_exits_two(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["frobnicate"])
        assert excinfo.value.code == 2


class TestCheckCommand:
    def test_ok(self, capsys):
        assert main(["check", "G[0,5](x > 1)"]) == 0
        assert "ok" in capsys.readouterr().out

    def test_diagnostics(self, capsys):
        assert main(["check", "F[3](x > 1)"]) == 1
        assert "two bounds" in capsys.readouterr().out


class TestTemplateCommand:
    def test_template(self, capsys):
        assert main(["template", "G[0,5](x > 1)"]) == 0
        assert capsys.readouterr().out.strip() == "G[NUM,NUM](SIG > NUM)"


class TestMonitorCommand:
    def test_monitor_true_false(self, tmp_path, capsys):
        path = tmp_path / "traces.jsonl"
        records = [
            trace_to_record(Trace(("x",), (0.0, 6.0), ((2.0,),))),
            trace_to_record(Trace(("x",), (0.0, 6.0), ((0.0,),))),
        ]
        path.write_text("\n".join(json.dumps(r) for r in records) + "\n", encoding="utf-8")
        assert main(["monitor", "--formula", "G[0,5](x > 1)", "--trace", str(path)]) == 0
        assert capsys.readouterr().out.strip() == "true"
        assert main(
            ["monitor", "--formula", "G[0,5](x > 1)", "--trace", str(path), "--index", "1"]
        ) == 0
        assert capsys.readouterr().out.strip() == "false"

    def test_horizon_error_is_domain_error(self, tmp_path, capsys):
        path = tmp_path / "traces.jsonl"
        path.write_text(
            json.dumps(trace_to_record(Trace(("x",), (0.0, 2.0), ((1.0,),)))) + "\n",
            encoding="utf-8",
        )
        assert main(["monitor", "--formula", "G[0,5](x > 1)", "--trace", str(path)]) == 1


class TestMutateCommand:
    def test_deterministic_outputs(self, tmp_path, capsys):
        corpus = [
            DatasetRecord(
                id="c1",
                nl="if the speed exceeds 50 then the brake activates within 3 seconds",
                stl="G[0,60](speed > 50 -> F[0,3](brake > 0))",
            ),
            DatasetRecord(
                id="c2",
                nl="signal y stays above 1.5 during the first 8 seconds",
                stl="G[0,8](y > 1.5)",
            ),
        ]
        source = tmp_path / "corpus.jsonl"
        write_records(str(source), corpus)
        out_a = tmp_path / "a.jsonl"
        out_b = tmp_path / "b.jsonl"
        for out in (out_a, out_b):
            code = main([
                "mutate", "--input", str(source), "--output", str(out),
                "--plan", "Temporal=1,Numerical=1", "--seed", "5",
            ])
            assert code == 0
        assert out_a.read_bytes() == out_b.read_bytes()
        written = [json.loads(l) for l in out_a.read_text().splitlines()]
        assert len(written) == 4


class TestEvaluateCommand:
    def test_prints_all_metrics(self, tmp_path, capsys):
        path = tmp_path / "pairs.jsonl"
        path.write_text(
            json.dumps({"generated": "G[0,5](x > 2)", "reference": "G[0,5](x > 1)"}) + "\n",
            encoding="utf-8",
        )
        assert main(["evaluate", "--pairs", str(path), "--format", "lines"]) == 0
        lines = [json.loads(l) for l in capsys.readouterr().out.splitlines()]
        row = lines[0]
        assert row["formula_accuracy"] == pytest.approx(10 / 11)
        assert row["template_accuracy"] == 1.0
        assert 0 <= row["bleu"] <= 1
        assert "mean" in lines[-1]

    def test_with_robustness(self, tmp_path, capsys):
        path = tmp_path / "pairs.jsonl"
        path.write_text(
            json.dumps({"generated": "F[0,5](x > 1)", "reference": "F[0,5](x > 1)"}) + "\n",
            encoding="utf-8",
        )
        assert main(
            ["evaluate", "--pairs", str(path), "--traces", "4", "--seed", "3", "--format", "lines"]
        ) == 0
        row = json.loads(capsys.readouterr().out.splitlines()[0])
        assert row["semantic_robustness"] == 100.0


class TestClarifyCommand:
    def test_offline_worked_example(self, tmp_path, capsys, fixture_path):
        answers = tmp_path / "answers.txt"
        answers.write_text("0.5\nthe first time\n", encoding="utf-8")
        transcript = tmp_path / "transcript.jsonl"
        code = main([
            "clarify", ORIGINAL,
            "--fixture", fixture_path,
            "--answers", str(answers),
            "--transcript", str(transcript),
        ])
        assert code == 0
        assert capsys.readouterr().out.strip() == FINAL_FORMULA
        events = [json.loads(l) for l in transcript.read_text().splitlines()]
        assert any(e["kind"] == "transform" for e in events)

    def test_missing_fixture_is_domain_error(self, capsys):
        assert main(["clarify", "text", "--backend", "scripted"]) == 1
        assert "fixture" in capsys.readouterr().err


class TestTrainCommand:
    def test_train_and_detect(self, tmp_path, capsys):
        records = []
        for i in range(24):
            label = "ambiguous" if i % 2 else "clean"
            records.append(
                DatasetRecord(
                    id=f"r{i}",
                    nl=f"signal s{i % 2} stays near the value {i} for a while" * (1 + i % 2),
                    label=label,
                    defect_types={"Semantic"} if label == "ambiguous" else set(),
                    parent_id="p" if label == "ambiguous" else None,
                )
            )
        data = tmp_path / "train.jsonl"
        write_records(str(data), records)
        model_path = tmp_path / "model.bin"
        twin_path = tmp_path / "model-twin.bin"
        for out in (model_path, twin_path):
            code = main([
                "train-ambiguity", "--input", str(data), "--output", str(out),
                "--epochs", "2", "--dim", "32", "--seed", "1",
            ])
            assert code == 0
        assert model_path.read_bytes() == twin_path.read_bytes()
        code = main([
            "detect", "--text", "it stays high soon", "--kind", "ambiguity",
            "--mode", "model", "--model", str(model_path), "--format", "lines",
        ])
        assert code == 0
        out = json.loads(capsys.readouterr().out.splitlines()[-1])
        assert "defective" in out


class TestDetectCommand:
    def test_rule_detection(self, capsys):
        assert main(["detect", "--text", "the system responds soon", "--format", "lines"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["defective"] is True
        assert "Temporal" in out["types"]
