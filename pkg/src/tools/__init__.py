"""Record I/O for corpora and classification results, and the corpus runner."""

from .corpus import CorpusRunner, corpus_records, deduplicate, enumerate_short_curves, twist_class_key
from .record_parser import CurveRecord, RecordParser, ResultRecord, dumps, timing_path

__all__ = [
    "CorpusRunner", "corpus_records", "deduplicate", "enumerate_short_curves", "twist_class_key",
    "CurveRecord", "RecordParser", "ResultRecord", "dumps", "timing_path",
]
