"""
Tests for record files, the corpus runner and corpus metrics.
"""

import json
from pathlib import Path

import pytest
from pydantic import ValidationError

from src.ecurve.curve import Curve
from src.qfield.field import EISENSTEIN, GAUSS
from src.tools.corpus import CorpusRunner, corpus_records, deduplicate, enumerate_short_curves, twist_class_key
from src.tools.record_parser import CurveRecord, RecordParser, ResultRecord, dumps, timing_path
from src.utils.errors import InvalidInputError
from src.utils.metrics import CorpusEvaluator

SAMPLE = Path(__file__).resolve().parents[1] / "data" / "sample" / "curves.jsonl"


def _result(record_id, field, torsion_F, timing=None):
    return ResultRecord(
        id=record_id,
        field=field,
        curve="[0,0,0,4,0]",
        torsion_K="2x4",
        torsion_F=torsion_F,
        certificate=[],
        timing=timing,
    )


class TestRecordParser:
    """Line-delimited curve and result records."""

    def test_read_sample_corpus(self):
        records = RecordParser().read_curves(SAMPLE)
        assert len(records) == 5
        assert records[0].id == "x32-gauss"
        assert records[0].to_curve() == Curve.short(GAUSS, 4, 0)
        assert records[1].expected_torsion_F == "4x12"

    def test_blank_lines_and_bad_json(self, tmp_path):
        path = tmp_path / "curves.jsonl"
        path.write_text(
            '\n{"id":"a","field":"gauss","coefficients":["0","0","0","4","0"]}\n\n{not json}\n',
            encoding="utf-8",
        )
        parser = RecordParser()
        with pytest.raises(InvalidInputError, match=":4:"):
            parser.read_curves(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            RecordParser().read_curves(tmp_path / "absent.jsonl")

    def test_invalid_record_reports_line(self, tmp_path):
        path = tmp_path / "curves.jsonl"
        path.write_text('{"id":"a","field":"gauss","coefficients":["0","0","0","0","0"]}\n', encoding="utf-8")
        with pytest.raises(InvalidInputError, match=":1:"):
            RecordParser().read_curves(path)

    @pytest.mark.parametrize(
        "payload",
        [
            {"id": "a", "field": "gauss", "coefficients": ["0", "0", "0", "4"]},
            {"id": "a", "field": "real", "coefficients": ["0", "0", "0", "4", "0"]},
            {"id": "a", "field": "gauss", "coefficients": ["0", "0", "0", "4", "0"], "extra": 1},
            {"id": "a", "field": "gauss", "coefficients": ["0", "0", "0", "4", "0"], "expected_torsion_K": "2x3"},
            {"id": "a", "field": "gauss", "coefficients": ["0", "0", "0", "4", "0"], "v": 2},
        ],
    )
    def test_curve_record_validation(self, payload):
        with pytest.raises(ValidationError):
            CurveRecord.model_validate(payload)

    def test_canonical_line(self):
        record = CurveRecord.from_curve("e", Curve.short(EISENSTEIN, 0, 1))
        assert record.coefficients == ["0", "0", "0", "0", "1"]
        assert dumps(record) == (
            '{"coefficients":["0","0","0","0","1"],"expected_torsion_F":null,'
            '"expected_torsion_K":null,"field":"eisenstein","id":"e","v":1}'
        )

    def test_curves_survive_a_write(self, tmp_path):
        records = RecordParser().read_curves(SAMPLE)
        path = tmp_path / "out" / "curves.jsonl"
        assert RecordParser().write_curves(records, path) == 5
        assert RecordParser().read_curves(path) == records

    def test_result_needs_exact_or_candidates(self):
        with pytest.raises(ValidationError):
            _result("a", "gauss", {"exact": "4x8", "candidates": ["4x8"]})
        with pytest.raises(ValidationError):
            _result("a", "gauss", {"candidates": []})
        assert _result("a", "gauss", {"candidates": ["2x16", "2x32"]}).groups()[1].n == 32

    def test_timings_go_to_the_sidecar(self, tmp_path):
        path = tmp_path / "results.jsonl"
        record = _result("a", "gauss", {"exact": "4x8"}, timing=0.25)
        RecordParser().write_results([record], path)

        line = path.read_text(encoding="utf-8").strip()
        assert "timing" not in json.loads(line)
        assert json.loads(timing_path(path).read_text(encoding="utf-8")) == {"id": "a", "seconds": 0.25}

        restored = RecordParser().read_results(path)
        assert restored == [record]
        assert restored[0].timing == 0.25
        assert _result("a", "gauss", {"exact": "4x8"}) == record


class TestCorpus:
    """Enumeration, twist-class deduplication and the runner."""

    def test_enumeration_skips_singular_models(self):
        curves = list(enumerate_short_curves(GAUSS, 1))
        assert len(curves) == 24
        assert all(not E.discriminant.is_zero() for E in curves)

    def test_twist_class_key(self):
        E = Curve.short(GAUSS, 1, 1)
        assert twist_class_key(E) == twist_class_key(E.quadratic_twist(GAUSS(3)))
        x32 = Curve.short(GAUSS, 4, 0)
        assert twist_class_key(x32) != twist_class_key(x32.quadratic_twist(GAUSS(3)))

    def test_deduplication_keeps_the_first_of_each_class(self):
        E = Curve.short(GAUSS, 1, 1)
        records = [
            CurveRecord.from_curve("first", E),
            CurveRecord.from_curve("twist", E.quadratic_twist(GAUSS(3))),
            CurveRecord.from_curve("other", Curve.short(GAUSS, 4, 0)),
        ]
        assert [r.id for r in deduplicate(records)] == ["first", "other"]

    def test_corpus_records(self):
        records = corpus_records(GAUSS, 1)
        assert len(records) == 12
        ids = [r.id for r in records]
        assert ids == sorted(ids)
        assert [r.id for r in corpus_records(GAUSS, 1, limit=5)] == ids[:5]

    def test_runner_keeps_input_order(self):
        records = RecordParser().read_curves(SAMPLE)[:2]
        results = CorpusRunner().run(records)
        assert [r.id for r in results] == ["x32-gauss", "x36-eisenstein"]
        assert [r.torsion_F["exact"] for r in results] == ["4x8", "4x12"]
        assert all(r.timing is not None for r in results)

    def test_pool_matches_serial_run(self):
        records = RecordParser().read_curves(SAMPLE)[:2]
        assert CorpusRunner(workers=2).run(records) == CorpusRunner(workers=1).run(records)


class TestCorpusEvaluator:
    """Histogram, list membership and the forbidden-subgroup scan."""

    @pytest.fixture
    def evaluator(self):
        return CorpusEvaluator([
            _result("a", "gauss", {"exact": "4x8"}, timing=0.5),
            _result("b", "gauss", {"candidates": ["2x16", "2x32"]}),
            _result("c", "eisenstein", {"exact": "4x24"}, timing=1.5),
            _result("d", "eisenstein", {"exact": "2x32"}),
        ])

    def test_one_row_per_reported_group(self, evaluator):
        assert len(evaluator.frame) == 5
        assert list(evaluator.frame["torsion_F"]) == ["4x8", "2x16", "2x32", "4x24", "2x32"]

    def test_histogram(self, evaluator):
        assert evaluator.histogram() == {"2x16|2x32": 1, "2x32": 1, "4x24": 1, "4x8": 1}

    def test_membership_depends_on_the_field(self, evaluator):
        membership = evaluator.theorem_main_membership()
        assert membership == {"members": 3, "outside": 2, "outside_ids": ["b", "c"]}

    def test_forbidden_scan(self, evaluator):
        scan = evaluator.forbidden_scan()
        assert scan["4x24"] == {"count": 1, "ids": ["c"]}
        assert scan["12x12"]["count"] == 0
        assert evaluator.violations() == ["b", "c"]

    def test_evaluate(self, evaluator):
        summary = evaluator.evaluate()
        assert summary["records"] == 4
        assert summary["exact"] == 3
        assert summary["candidate_sets"] == 1
        assert summary["timing"] == {"total_seconds": 2.0, "mean_seconds": 1.0, "max_seconds": 1.5}

    def test_empty_corpus(self):
        summary = CorpusEvaluator([]).evaluate()
        assert summary["records"] == 0
        assert summary["histogram"] == {}
        assert summary["theorem_main"]["outside"] == 0
        assert summary["timing"] is None
