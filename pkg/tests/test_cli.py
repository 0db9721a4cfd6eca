"""
Command-line tests: exit codes and the JSON lines written to stdout.
"""

import json
from pathlib import Path

import pytest

from src.main import EXIT_INPUT, EXIT_OK, EXIT_VIOLATION, main

SAMPLE = Path(__file__).resolve().parents[1] / "data" / "sample" / "curves.jsonl"


def _stdout_lines(capsys):
    return [json.loads(line) for line in capsys.readouterr().out.splitlines() if line.strip()]


class TestClassify:
    """classify --curve and classify --input."""

    def test_single_curve(self, capsys):
        assert main(["classify", "--field", "gauss", "--curve", "[0,0,0,4,0]"]) == EXIT_OK
        (record,) = _stdout_lines(capsys)
        assert record["id"] == "curve-1"
        assert record["torsion_K"] == "2x4"
        assert record["torsion_F"] == {"exact": "4x8"}
        assert record["certificate"][-1]["rule"] == "MAIN"

    def test_sample_corpus_meets_its_expectations(self, tmp_path):
        out = tmp_path / "results.jsonl"
        assert main(["classify", "--input", str(SAMPLE), "--out", str(out)]) == EXIT_OK
        lines = out.read_text(encoding="utf-8").splitlines()
        assert len(lines) == 5
        assert (tmp_path / "results.jsonl.timing.jsonl").exists()

    def test_expectation_mismatch(self, tmp_path):
        corpus = tmp_path / "curves.jsonl"
        corpus.write_text(
            '{"id":"x32","field":"gauss","coefficients":["0","0","0","4","0"],"expected_torsion_K":"2x2"}\n',
            encoding="utf-8",
        )
        assert main(["classify", "--input", str(corpus)]) == EXIT_VIOLATION

    def test_input_errors(self, tmp_path):
        assert main(["classify", "--field", "gauss"]) == EXIT_INPUT
        assert main(["classify", "--curve", "[0,0,0,4,0]"]) == EXIT_INPUT
        assert main(["classify", "--field", "gauss", "--curve", "[0,0,0,0,0]"]) == EXIT_INPUT
        assert main(["classify", "--field", "gauss", "--curve", "[0,0,0,4"]) == EXIT_INPUT
        assert main(["classify", "--input", str(tmp_path / "absent.jsonl")]) == EXIT_INPUT

    def test_unknown_field_is_rejected_by_the_parser(self):
        with pytest.raises(SystemExit):
            main(["classify", "--field", "real", "--curve", "[0,0,0,4,0]"])


class TestTools:
    """cusps, count-points, fermat-search and verify."""

    def test_cusps(self, capsys):
        assert main(["cusps", "32"]) == EXIT_OK
        (payload,) = _stdout_lines(capsys)
        assert payload["total"] == 8
        assert payload["over_gauss"] == 8
        assert payload["over_eisenstein"] == 4

    def test_cusps_level_out_of_range(self):
        assert main(["cusps", "0"]) == EXIT_INPUT

    @pytest.mark.parametrize("prime,degree,q,count", [("5", 1, 5, 8), ("5", 2, 5, 32), ("3", 1, 9, 16)])
    def test_count_points(self, capsys, prime, degree, q, count):
        argv = ["count-points", "--field", "gauss", "--curve", "[0,0,0,4,0]", "--prime", prime, "--degree", str(degree)]
        assert main(argv) == EXIT_OK
        (payload,) = _stdout_lines(capsys)
        assert payload["q"] == q
        assert payload["count"] == count
        assert payload["field_size"] == q ** degree

    def test_count_points_at_bad_prime(self):
        argv = ["count-points", "--field", "gauss", "--curve", "[0,0,0,5,0]", "--prime", "5"]
        assert main(argv) == EXIT_INPUT

    def test_fermat_search(self, capsys):
        argv = ["fermat-search", "--field", "gauss", "--radicand", "-7", "--height", "2", "--coeff-bound", "1"]
        assert main(argv) == EXIT_OK
        solutions = _stdout_lines(capsys)
        assert len(solutions) == 40
        assert sum(1 for s in solutions if not s["trivial"]) == 32

    def test_verify_unknown_suite(self):
        assert main(["verify", "nonsense"]) == EXIT_INPUT

    def test_verify_cusps(self, tmp_path):
        out = tmp_path / "verify.json"
        assert main(["verify", "cusps", "--out", str(out)]) == EXIT_OK
        payload = json.loads(out.read_text(encoding="utf-8"))
        assert payload["passed"] is True
        assert payload["suites"] == ["cusps"]
