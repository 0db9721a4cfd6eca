"""
Record Parser Tool.

Line-delimited JSON records for curve corpora and classification results.
Every record carries the schema version "v": 1. Result timings go to a
sidecar file next to the result stream, so the stream itself is
reproducible byte for byte.
"""

import json
from pathlib import Path
from typing import Any, Dict, Iterable, Iterator, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..ecurve.curve import Curve
from ..growth.rules import GrowthResult
from ..qfield.field import field_by_name
from ..torsion.groups import TorsionGroup
from ..utils.errors import InvalidInputError
from ..utils.logger import get_logger

logger = get_logger(__name__)

SCHEMA_VERSION = 1
TIMING_SUFFIX = ".timing.jsonl"


class CurveRecord(BaseModel):
    """
    One input curve.

    Attributes:
        id: Record identifier
        field: "gauss" or "eisenstein"
        coefficients: [a1, a2, a3, a4, a6] as field-element text
        expected_torsion_K: Optional expected E(K)_tors, e.g. "2x4"
        expected_torsion_F: Optional expected E(F)_tors
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    v: int = SCHEMA_VERSION
    id: str
    field: Literal["gauss", "eisenstein"]
    coefficients: List[str]
    expected_torsion_K: Optional[str] = None
    expected_torsion_F: Optional[str] = None

    @field_validator("coefficients")
    @classmethod
    def _five_coefficients(cls, value: List[str]) -> List[str]:
        if len(value) != 5:
            raise ValueError(f"expected 5 coefficients, got {len(value)}")
        return value

    @field_validator("expected_torsion_K", "expected_torsion_F")
    @classmethod
    def _group_text(cls, value: Optional[str]) -> Optional[str]:
        if value is not None:
            TorsionGroup.parse(value)
        return value

    @model_validator(mode="after")
    def _nonsingular(self) -> "CurveRecord":
        if self.v != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema version {self.v}")
        self.to_curve()
        return self

    def to_curve(self) -> Curve:
        """The curve, parsed with the record's field.

        Raises:
            FieldParseError: On malformed coefficients
            SingularCurveError: If the model is singular
        """
        return Curve.parse("[" + ",".join(self.coefficients) + "]", field_by_name(self.field))

    @classmethod
    def from_curve(cls, record_id: str, E: Curve) -> "CurveRecord":
        return cls(id=record_id, field=E.field.name, coefficients=[str(c) for c in E.coeffs])


class ResultRecord(BaseModel):
    """
    Classification output for one curve.

    The timing field is never serialized into the record stream and is
    ignored by equality.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    v: int = SCHEMA_VERSION
    id: str
    field: Literal["gauss", "eisenstein"]
    curve: str
    torsion_K: str
    torsion_F: Dict[str, Any]
    certificate: List[Dict[str, Any]]
    witness_radicands: List[str] = Field(default_factory=list)
    timing: Optional[float] = Field(default=None, exclude=True)

    @field_validator("torsion_F")
    @classmethod
    def _exact_or_candidates(cls, value: Dict[str, Any]) -> Dict[str, Any]:
        if set(value) == {"exact"}:
            TorsionGroup.parse(value["exact"])
        elif set(value) == {"candidates"} and value["candidates"]:
            for text in value["candidates"]:
                TorsionGroup.parse(text)
        else:
            raise ValueError("torsion_F needs exactly one of 'exact' or a nonempty 'candidates'")
        return value

    @classmethod
    def from_result(cls, record_id: str, E: Curve, result: GrowthResult, timing: Optional[float] = None) -> "ResultRecord":
        return cls(
            id=record_id,
            field=E.field.name,
            curve=str(E),
            torsion_K=result.torsion_K.format(),
            torsion_F=result.torsion_F_dict(),
            certificate=result.certificate.to_list(),
            witness_radicands=[str(d) for d in result.witness_radicands],
            timing=timing,
        )

    def groups(self) -> List[TorsionGroup]:
        """The exact group, or the candidate groups."""
        if "exact" in self.torsion_F:
            return [TorsionGroup.parse(self.torsion_F["exact"])]
        return [TorsionGroup.parse(text) for text in self.torsion_F["candidates"]]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ResultRecord):
            return NotImplemented
        return self.model_dump() == other.model_dump()

    def __hash__(self) -> int:
        return hash(dumps(self))


def dumps(record: BaseModel) -> str:
    """Canonical one-line JSON for a record (sorted keys, UTF-8 text)."""
    return json.dumps(record.model_dump(mode="json"), sort_keys=True, ensure_ascii=False, separators=(",", ":"))


def timing_path(path: Union[str, Path]) -> Path:
    path = Path(path)
    return path.with_name(path.name + TIMING_SUFFIX)


class RecordParser:
    """
    Reads and writes line-delimited record files.

    Blank lines are skipped; any other malformed line raises with its line
    number.
    """

    def __init__(self, encoding: str = "utf-8"):
        self.encoding = encoding

    def _lines(self, path: Union[str, Path]) -> Iterator[tuple]:
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(f"File not found: {path}")
        with open(path, "r", encoding=self.encoding) as handle:
            for number, line in enumerate(handle, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    yield number, json.loads(line)
                except json.JSONDecodeError as exc:
                    raise InvalidInputError(f"{path}:{number}: invalid JSON ({exc.msg} at column {exc.colno})") from exc

    def iter_curves(self, path: Union[str, Path]) -> Iterator[CurveRecord]:
        """
        Yield curve records from a corpus file.

        Raises:
            FileNotFoundError: If the file does not exist
            InvalidInputError: On invalid JSON or a record failing validation
        """
        for number, raw in self._lines(path):
            try:
                yield CurveRecord.model_validate(raw)
            except ValueError as exc:
                raise InvalidInputError(f"{path}:{number}: {exc}") from exc

    def read_curves(self, path: Union[str, Path]) -> List[CurveRecord]:
        records = list(self.iter_curves(path))
        logger.debug(f"Read {len(records)} curve records from {path}")
        return records

    def read_results(self, path: Union[str, Path]) -> List[ResultRecord]:
        """Read a result stream, attaching timings from the sidecar when present."""
        results = []
        for number, raw in self._lines(path):
            try:
                results.append(ResultRecord.model_validate(raw))
            except ValueError as exc:
                raise InvalidInputError(f"{path}:{number}: {exc}") from exc
        sidecar = timing_path(path)
        if sidecar.exists():
            timings = {raw["id"]: raw["seconds"] for _, raw in self._lines(sidecar)}
            results = [r.model_copy(update={"timing": timings.get(r.id)}) for r in results]
        return results

    def write_curves(self, records: Iterable[CurveRecord], path: Union[str, Path]) -> int:
        return self._write(records, Path(path))

    def write_results(self, records: Iterable[ResultRecord], path: Union[str, Path]) -> int:
        """
        Write results and their timing sidecar.

        Returns:
            Number of records written
        """
        records = list(records)
        count = self._write(records, Path(path))
        with open(timing_path(path), "w", encoding=self.encoding) as handle:
            for record in records:
                if record.timing is not None:
                    handle.write(json.dumps({"id": record.id, "seconds": round(record.timing, 6)}) + "\n")
        return count

    def _write(self, records: Iterable[BaseModel], path: Path) -> int:
        path.parent.mkdir(parents=True, exist_ok=True)
        count = 0
        with open(path, "w", encoding=self.encoding) as handle:
            for record in records:
                handle.write(dumps(record) + "\n")
                count += 1
        logger.debug(f"Wrote {count} records to {path}")
        return count
