"""CSV and matrix text output."""

import sys
from typing import Optional

import numpy as np
import pandas as pd

# 17 significant digits round-trip every double
FLOAT_FORMAT = "%.17g"


def write_frame(frame: pd.DataFrame, out: Optional[str] = None) -> None:
    """
    Write a frame as CSV with a header line.

    Args:
        frame: Data to write
        out: Output path, stdout when None
    """
    target = out if out is not None else sys.stdout
    frame.to_csv(target, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")


def write_matrix(entries: np.ndarray, out: Optional[str] = None) -> None:
    """
    Write a dense matrix as whitespace-separated rows.

    Args:
        entries: 2-D array
        out: Output path, stdout when None
    """
    target = out if out is not None else sys.stdout
    np.savetxt(target, entries, fmt=FLOAT_FORMAT, delimiter=" ")


def matrix_path(out: Optional[str]) -> Optional[str]:
    """Path of the matrix dump that accompanies a CSV at out, None for stdout."""
    if out is None:
        return None
    return out[:-4] + ".matrix.txt" if out.endswith(".csv") else out + ".matrix.txt"
