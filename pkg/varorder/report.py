"""Numeric-versus-reference comparison reports."""

from dataclasses import dataclass, field
from typing import Dict

import numpy as np
import pandas as pd


@dataclass(frozen=True)
class ComparisonReport:
    """
    Per-sample comparison of a numeric result against a reference.

    Attributes:
        t: Sample times
        numeric: Numeric values
        reference: Reference values
        discrepancies: Named scalar discrepancies from engine cross-checks
    """
    t: np.ndarray
    numeric: np.ndarray
    reference: np.ndarray
    discrepancies: Dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        for name in ("t", "numeric", "reference"):
            object.__setattr__(self, name, np.asarray(getattr(self, name), dtype=float))
        if not (len(self.t) == len(self.numeric) == len(self.reference)):
            raise ValueError(
                f"Report columns differ in length: t={len(self.t)}, "
                f"numeric={len(self.numeric)}, reference={len(self.reference)}"
            )

    def __len__(self) -> int:
        return len(self.t)

    @property
    def error(self) -> np.ndarray:
        """Signed error numeric - reference."""
        return self.numeric - self.reference

    @property
    def max_abs_error(self) -> float:
        return float(np.max(np.abs(self.error))) if len(self) else 0.0

    @property
    def rms_error(self) -> float:
        return float(np.sqrt(np.mean(self.error ** 2))) if len(self) else 0.0

    @property
    def final_error(self) -> float:
        return float(abs(self.error[-1])) if len(self) else 0.0

    @property
    def max_discrepancy(self) -> float:
        """Largest named discrepancy, 0 if none were recorded."""
        return max(self.discrepancies.values(), default=0.0)

    def summary(self) -> Dict[str, float]:
        """Error statistics plus any recorded discrepancies."""
        stats = {
            "max_abs_error": self.max_abs_error,
            "rms_error": self.rms_error,
            "final_error": self.final_error,
        }
        stats.update(self.discrepancies)
        return stats

    def to_frame(self) -> pd.DataFrame:
        """Rows (t, numeric, reference, error)."""
        return pd.DataFrame({
            "t": self.t,
            "numeric": self.numeric,
            "reference": self.reference,
            "error": self.error,
        })
