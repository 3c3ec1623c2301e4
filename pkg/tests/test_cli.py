import json

import numpy as np
import pytest

from qlra import context_data as cd
from qlra.cli import main

from conftest import random_complex_data, uniform_data


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def example_file(tmp_path, capsys):
    path = tmp_path / "example.json"
    assert run(capsys, "paper-example", "--out", path)[0] == 0
    return path


def write(tmp_path, data, name="d.json"):
    path = tmp_path / name
    cd.save(data, path)
    return path


class TestValidate:
    def test_uniform(self, tmp_path, capsys):
        code, out, _ = run(capsys, "validate", write(tmp_path, uniform_data()))
        assert code == 0
        assert "verdict: pass" in out

    def test_row_sum_violation(self, tmp_path, capsys):
        data = uniform_data()
        singles = np.array(data.singles)
        singles[0] = (0.5, 0.5, 0.1)
        code, out, _ = run(capsys, "validate", write(tmp_path, data.replace(singles=singles)))
        assert code == 2
        assert "FAIL singles row 1 sums to 1" in out

    def test_malformed(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text('{"priors": [0.1, 0.2')
        assert run(capsys, "validate", path)[0] == 1

    def test_missing_file(self, tmp_path, capsys):
        assert run(capsys, "validate", tmp_path / "nope.json")[0] == 1

    def test_tolerance_flag(self, tmp_path, capsys):
        data = uniform_data().replace(priors=[1 / 3 + 1e-8, 1 / 3, 1 / 3])
        path = write(tmp_path, data)
        assert run(capsys, "validate", path)[0] == 2
        assert run(capsys, "validate", path, "--tol", "1e-6")[0] == 0

    def test_machine_format(self, tmp_path, capsys):
        code, out, _ = run(capsys, "validate", write(tmp_path, uniform_data()), "--format", "machine")
        doc = json.loads(out)
        assert code == 0 and doc["passed"] and doc["status"] == "pass"


class TestRepresent:
    def test_worked_example(self, example_file, capsys):
        code, out, _ = run(capsys, "represent", example_file)
        assert code == 0
        assert "class: Hyperbolic" in out
        assert "reconstructed p_b: 0.235294  0.529412  0.235294" in out

    def test_machine_matches_table(self, example_file, capsys):
        code, out, _ = run(capsys, "represent", example_file, "--format", "machine")
        doc = json.loads(out)
        assert code == 0
        assert doc["interference"]["class"] == "Hyperbolic"
        np.testing.assert_allclose(doc["reconstructed_b"], np.array([4, 9, 4]) / 17, atol=1e-9)

    def test_perturbed(self, example_file, tmp_path, capsys):
        data = cd.load(example_file)
        pairs = np.array(data.pairs)
        pairs[1, 0] += 0.05
        pairs[:, 0] /= pairs[:, 0].sum()
        code, out, _ = run(capsys, "represent", write(tmp_path, data.replace(pairs=pairs), "p.json"))
        assert code == 3
        assert "infeasible" in out

    def test_complex_generated(self, tmp_path, capsys):
        code, out, _ = run(capsys, "represent", write(tmp_path, random_complex_data(0)[0]))
        assert code == 0
        assert "class: Trigonometric" in out
        assert "field: complex" in out

    def test_field_mismatch(self, example_file, capsys):
        assert run(capsys, "represent", example_file, "--field", "complex")[0] == 3
        assert run(capsys, "represent", example_file, "--field", "hyperbolic")[0] == 0

    def test_invalid_data(self, tmp_path, capsys):
        data = uniform_data().replace(priors=[0.5, 0.5, 0.5])
        assert run(capsys, "represent", write(tmp_path, data))[0] == 2

    def test_bad_tolerance(self, example_file, capsys):
        with pytest.raises(SystemExit):
            main(["represent", str(example_file), "--tol-phase", "-1"])


class TestClassify:
    def test_worked_example(self, example_file, capsys):
        code, out, _ = run(capsys, "classify", example_file)
        assert code == 0
        assert "class: Hyperbolic" in out
        assert "1.166449" in out

    def test_uniform(self, tmp_path, capsys):
        code, out, _ = run(capsys, "classify", write(tmp_path, uniform_data()), "--format", "machine")
        assert json.loads(out)["class"] == "Trigonometric"


class TestExampleCommand:
    def test_default(self, tmp_path, capsys, monkeypatch):
        monkeypatch.chdir(tmp_path)
        code, out, _ = run(capsys, "paper-example")
        assert code == 0
        assert out.count(" ok") == 12
        assert "priors_sum: 0.99999999999999" in out or "priors_sum: 1.0" in out
        assert (tmp_path / "paper_example.json").exists()

    def test_emitted_file_validates(self, example_file, capsys):
        assert run(capsys, "validate", example_file)[0] == 0

    def test_machine(self, tmp_path, capsys):
        code, out, _ = run(capsys, "paper-example", "--out", tmp_path / "e.json", "--format", "machine")
        doc = json.loads(out)
        assert doc["passed"] and len(doc["rows"]) == 12
        assert doc["extras"]["priors_sum"] == pytest.approx(1.0, abs=1e-9)

    def test_unwritable(self, tmp_path, capsys):
        assert run(capsys, "paper-example", "--out", tmp_path / "missing" / "e.json")[0] == 1


class TestOracleCheck:
    def test_complex(self, capsys):
        code, out, err = run(capsys, "oracle-check", "--trials", 100, "--field", "complex", "--seed", 1)
        assert code == 0
        assert "verdict: pass" in out
        assert "elapsed" in err

    def test_deterministic(self, capsys):
        first = run(capsys, "oracle-check", "--trials", 30, "--seed", 9)[1]
        second = run(capsys, "oracle-check", "--trials", 30, "--seed", 9)[1]
        assert first == second

    def test_failure_exit(self, capsys, monkeypatch):
        from qlra import sweep
        monkeypatch.setattr(sweep, "UNITARY_TOL", 0.0)
        code, out, _ = run(capsys, "oracle-check", "--trials", 5, "--seed", 2, "--format", "machine")
        doc = json.loads(out)
        assert code == 5
        fail = doc["first_failure"]
        assert {"seed", "a23", "v", "gamma"} <= set(fail)

    def test_trials_must_be_positive(self):
        with pytest.raises(SystemExit):
            main(["oracle-check", "--trials", "0"])


class TestSweep:
    def test_stdout_csv(self, capsys):
        code, out, _ = run(capsys, "sweep", "--count", 10, "--seed", 4)
        lines = out.strip().splitlines()
        assert code == 0
        assert len(lines) == 11
        assert "Hyperbolic" in out

    def test_file_json(self, tmp_path, capsys):
        path = tmp_path / "s.json"
        code, out, _ = run(capsys, "sweep", "--count", 10, "--seed", 4, "--out", path, "--out-format", "json")
        doc = json.loads(path.read_text())
        assert code == 0
        assert len(doc["records"]) == 10
        assert {r["interference_class"] for r in doc["records"]} <= {"Trigonometric", "Hyperbolic", "HyperTrigonometric"}
        assert "acceptance rate" in out

    def test_unwritable(self, tmp_path, capsys):
        assert run(capsys, "sweep", "--count", 2, "--out", tmp_path / "no" / "s.csv")[0] == 1

    def test_range_flags(self, capsys):
        code, out, _ = run(capsys, "sweep", "--count", 3, "--mag-min", 1, "--mag-max", 2, "--field", "complex")
        assert code == 0
        assert "Trigonometric" in out

    def test_bad_range(self, capsys):
        assert run(capsys, "sweep", "--count", 3, "--mag-min", 0)[0] == 2
