"""
Corpus Runner.

Enumerates short-model curves y^2 = x^3 + Ax + B with A, B in O_K of bounded
norm, drops curves whose E(F) is already fixed by an earlier member of the
same twist class, and classifies the rest. With more than one worker the
curves are classified on a process pool; results always come back in input
order.
"""

import multiprocessing
import time
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from ..ecurve.curve import Curve
from ..growth.classifier import classify_growth
from ..qfield.field import QField
from ..qfield.rings import ring_elements_up_to_norm
from ..utils.config import configure, get_settings
from ..utils.errors import ClassificationViolation
from ..utils.logger import get_logger
from .record_parser import CurveRecord, ResultRecord

logger = get_logger(__name__)

SPECIAL_J = (0, 1728)


def enumerate_short_curves(field: QField, coeff_bound: int) -> Iterator[Curve]:
    """
    Nonsingular short models with N(A), N(B) <= coeff_bound.

    Args:
        field: Active field
        coeff_bound: Norm bound on both coefficients

    Yields:
        Curves in a fixed order (A outer, B inner, each by norm then coordinates)
    """
    elems = ring_elements_up_to_norm(field, coeff_bound)
    for A in elems:
        for B in elems:
            if (4 * A ** 3 + 27 * B ** 2).is_zero():
                continue
            yield Curve.short(field, A, B)


def twist_class_key(E: Curve) -> Tuple:
    """
    Key shared by curves with the same E(F).

    Curves with equal j outside {0, 1728} are quadratic twists of each other
    and so isomorphic over F. For j = 0 and j = 1728 the higher twists differ,
    so those curves are keyed by their own model.
    """
    j = E.j_invariant
    if any(j == special for special in SPECIAL_J):
        return ("model", E.field.D, tuple(E.coeffs))
    return ("j", E.field.D, j)


def deduplicate(records: Iterable[CurveRecord]) -> List[CurveRecord]:
    """Keep the first record of every twist class, preserving order."""
    seen = set()
    kept = []
    skipped = 0
    for record in records:
        key = twist_class_key(record.to_curve())
        if key in seen:
            skipped += 1
            continue
        seen.add(key)
        kept.append(record)
    if skipped:
        logger.debug(f"Deduplication dropped {skipped} curves sharing a twist class")
    return kept


def corpus_records(field: QField, coeff_bound: int, limit: Optional[int] = None) -> List[CurveRecord]:
    """
    The deduplicated enumeration corpus as curve records.

    Record ids are the field name and the position in the full enumeration,
    so ids stay stable when the limit changes.
    """
    records = (
        CurveRecord.from_curve(f"{field.name}-{index:05d}", E)
        for index, E in enumerate(enumerate_short_curves(field, coeff_bound))
    )
    kept = deduplicate(records)
    if limit is not None:
        kept = kept[:limit]
    logger.info(f"Corpus over {field!r} with coefficient norm <= {coeff_bound}: {len(kept)} curves")
    return kept


def _classify_item(item: Tuple[str, str, List[str]]) -> Dict[str, Any]:
    record_id, field_name, coefficients = item
    E = CurveRecord(id=record_id, field=field_name, coefficients=coefficients).to_curve()
    start = time.perf_counter()
    try:
        result = classify_growth(E)
    except ClassificationViolation as exc:
        return {"id": record_id, "violation": str(exc), "evidence": exc.evidence}
    elapsed = time.perf_counter() - start
    record = ResultRecord.from_result(record_id, E, result)
    return {"id": record_id, "record": record.model_dump(mode="json"), "timing": elapsed}


def _init_worker(settings: Dict[str, Any]):
    configure(**settings)


class CorpusRunner:
    """
    Classifies curve records, serially or on a process pool.

    Args:
        workers: Number of worker processes; 1 classifies in-process
    """

    def __init__(self, workers: int = 1):
        self.workers = max(1, workers)

    def _outputs(self, payload: List[Tuple[str, str, List[str]]]) -> Iterable[Dict[str, Any]]:
        if self.workers == 1 or len(payload) < 2:
            return map(_classify_item, payload)
        processes = min(self.workers, len(payload), multiprocessing.cpu_count())
        logger.debug(f"Classifying {len(payload)} curves on {processes} processes")
        with multiprocessing.Pool(
            processes=processes, initializer=_init_worker, initargs=(get_settings().model_dump(),)
        ) as pool:
            return list(pool.imap(_classify_item, payload))

    def iter_results(self, records: Sequence[CurveRecord]) -> Iterator[ResultRecord]:
        """
        Yield one result per record, in input order.

        Raises:
            ClassificationViolation: For the first curve whose classification
                contradicts a proven list, with that curve in the evidence
        """
        payload = [(r.id, r.field, list(r.coefficients)) for r in records]
        for output in self._outputs(payload):
            if "violation" in output:
                evidence = {"id": output["id"], **output["evidence"]}
                raise ClassificationViolation(f"{output['id']}: {output['violation']}", evidence)
            record = ResultRecord.model_validate(output["record"])
            yield record.model_copy(update={"timing": output["timing"]})

    def run(self, records: Sequence[CurveRecord]) -> List[ResultRecord]:
        return list(self.iter_results(records))
