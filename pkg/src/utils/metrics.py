"""
Corpus Metrics.

Summaries of a corpus of classification results: the distribution of
E(F)_tors, membership in the list of possible groups over F, and a scan for
subgroups that can never occur.
"""

from typing import Any, Dict, List, Optional, Sequence

import numpy as np
import pandas as pd

from ..qfield.field import field_by_name
from ..torsion.groups import FORBIDDEN_SUBGROUPS, theorem_main_list

COLUMNS = ["id", "field", "torsion_K", "torsion_F", "m", "n", "exact", "timing"]


class CorpusEvaluator:
    """
    Evaluates a list of ResultRecords.

    Each record contributes one row per group it reports: one row for an
    exact result, one per candidate otherwise. Every check is applied to
    every candidate.
    """

    def __init__(self, records: Sequence):
        self.records = list(records)
        self.frame = self._build_frame()

    def _build_frame(self) -> pd.DataFrame:
        rows = []
        for record in self.records:
            exact = "exact" in record.torsion_F
            for group in record.groups():
                rows.append({
                    "id": record.id,
                    "field": record.field,
                    "torsion_K": record.torsion_K,
                    "torsion_F": group.format(),
                    "m": group.m,
                    "n": group.n,
                    "exact": exact,
                    "timing": record.timing,
                })
        frame = pd.DataFrame(rows, columns=COLUMNS)
        return frame.astype({"m": "int64", "n": "int64", "exact": "bool"})

    def histogram(self) -> Dict[str, int]:
        """
        Number of records per reported E(F)_tors.

        Candidate sets are counted under their joined text, e.g. "2x16|2x32".
        """
        labels = [
            record.torsion_F["exact"] if "exact" in record.torsion_F else "|".join(record.torsion_F["candidates"])
            for record in self.records
        ]
        counts = pd.Series(labels, dtype="object").value_counts()
        return {label: int(counts[label]) for label in sorted(counts.index)}

    def theorem_main_membership(self) -> Dict[str, Any]:
        """Rows inside and outside the list of possible groups over F."""
        if self.frame.empty:
            return {"members": 0, "outside": 0, "outside_ids": []}
        allowed = {
            name: {G.format() for G in theorem_main_list(field_by_name(name))}
            for name in self.frame["field"].unique()
        }
        inside = np.array(
            [text in allowed[field] for field, text in zip(self.frame["field"], self.frame["torsion_F"])], dtype=bool
        )
        outside_ids = sorted(set(self.frame.loc[~inside, "id"]))
        return {"members": int(inside.sum()), "outside": int((~inside).sum()), "outside_ids": outside_ids}

    def forbidden_scan(self) -> Dict[str, Dict[str, Any]]:
        """
        Rows containing each forbidden subgroup.

        Z/a + Z/b embeds in Z/m + Z/n exactly when a | m and b | n, so each
        subgroup is one divisibility mask over the (m, n) columns.
        """
        m = self.frame["m"].to_numpy(dtype=np.int64)
        n = self.frame["n"].to_numpy(dtype=np.int64)
        scan = {}
        for H in FORBIDDEN_SUBGROUPS:
            mask = (m % H.m == 0) & (n % H.n == 0)
            scan[H.format()] = {"count": int(mask.sum()), "ids": sorted(set(self.frame.loc[mask, "id"]))}
        return scan

    def timing_summary(self) -> Optional[Dict[str, float]]:
        timings = np.array([r.timing for r in self.records if r.timing is not None], dtype=float)
        if timings.size == 0:
            return None
        return {
            "total_seconds": float(timings.sum()),
            "mean_seconds": float(timings.mean()),
            "max_seconds": float(timings.max()),
        }

    def violations(self) -> List[str]:
        """Ids of records outside the list or holding a forbidden subgroup."""
        ids = set(self.theorem_main_membership()["outside_ids"])
        for hit in self.forbidden_scan().values():
            ids.update(hit["ids"])
        return sorted(ids)

    def evaluate(self) -> Dict[str, Any]:
        """
        Full corpus summary.

        Returns:
            Record counts, histogram, list membership, forbidden-subgroup
            scan and timing summary
        """
        exact = sum(1 for r in self.records if "exact" in r.torsion_F)
        return {
            "records": len(self.records),
            "exact": exact,
            "candidate_sets": len(self.records) - exact,
            "histogram": self.histogram(),
            "theorem_main": self.theorem_main_membership(),
            "forbidden": self.forbidden_scan(),
            "timing": self.timing_summary(),
        }
