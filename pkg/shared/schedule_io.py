"""Schedule and signal ingestion for the command line."""

import logging
import math
from pathlib import Path

import numpy as np
import pandas as pd

from varorder.oracles import EX1_SCHEDULE, EX2_SCHEDULE
from varorder.schedule import Alignment, TimedSchedule
from varorder.signal import SampledSignal

logger = logging.getLogger(__name__)

# Order -1 on [0, 1), -2 afterwards
A3_SCHEDULE = TimedSchedule(((0.0, -1.0), (1.0, -2.0)))

NAMED_SCHEDULES = {
    "a3": A3_SCHEDULE,
    "ex1": EX1_SCHEDULE,
    "ex2": EX2_SCHEDULE,
}


def _parse_number(token: str, line_no: int, what: str) -> float:
    try:
        value = float(token)
    except ValueError:
        raise ValueError(f"Line {line_no}: malformed {what} {token.strip()!r}") from None
    if not math.isfinite(value):
        raise ValueError(f"Line {line_no}: {what} must be finite, got {token.strip()!r}")
    return value


def parse_schedule(text: str) -> TimedSchedule:
    """
    Parse "t_start,alpha" entries into a time-based schedule.

    Entries are separated by newlines or semicolons; '#' starts a comment and
    blank entries are ignored.

    Args:
        text: Schedule text

    Returns:
        TimedSchedule in seconds

    Raises:
        ValueError: On a malformed entry, a first time other than 0, or
            non-ascending times
    """
    segments = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        for entry in line.split(";"):
            entry = entry.strip()
            if not entry:
                continue
            parts = entry.split(",")
            if len(parts) != 2:
                raise ValueError(f"Line {line_no}: expected 't_start,alpha', got {entry!r}")
            t = _parse_number(parts[0], line_no, "switch time")
            order = _parse_number(parts[1], line_no, "order")
            if segments and t <= segments[-1][0]:
                raise ValueError(f"Line {line_no}: switch times must ascend, got {t} after {segments[-1][0]}")
            segments.append((t, order))
    if not segments:
        raise ValueError("Schedule is empty")
    if segments[0][0] != 0.0:
        raise ValueError(f"Schedule must start at t = 0, got {segments[0][0]}")
    return TimedSchedule(tuple(segments))


def load_schedule(source: str) -> TimedSchedule:
    """
    Resolve a --schedule argument.

    Args:
        source: A named schedule (a3, ex1, ex2), "@path" for a UTF-8 file, or
            inline text "t,a;t,a;..."

    Raises:
        ValueError: On bad schedule text
        OSError: If the file cannot be read
    """
    if source in NAMED_SCHEDULES:
        return NAMED_SCHEDULES[source]
    if source.startswith("@"):
        path = Path(source[1:])
        logger.debug("Reading schedule from %s", path)
        return parse_schedule(path.read_text(encoding="utf-8"))
    return parse_schedule(source)


def load_signal(source: str, h: float, samples: int,
                alignment: Alignment = Alignment.INTERVAL) -> SampledSignal:
    """
    Resolve a --signal argument.

    Args:
        source: "step" for the unit step, or "file:<path>" for a file holding
            one sample per line (a CSV with a "value" column also works)
        h: Time step
        samples: Number of samples the run needs
        alignment: Grid alignment of the run; under interval alignment the
            step is 0 at sample 0, whose interval lies before t = 0

    Raises:
        ValueError: On an unknown source or a file with too few samples
        OSError: If the file cannot be read
    """
    if source == "step":
        value_at_zero = 0.0 if alignment is Alignment.INTERVAL else 1.0
        return SampledSignal.unit_step(h, samples, value_at_zero)
    if source.startswith("file:"):
        path = Path(source[len("file:"):])
        frame = pd.read_csv(path, comment="#", header=None)
        if frame.shape[0] and str(frame.iloc[0, -1]).strip() == "value":
            frame = pd.read_csv(path, comment="#")
            values = frame["value"].to_numpy(dtype=float)
        else:
            values = frame.iloc[:, -1].to_numpy(dtype=float)
        if len(values) < samples:
            raise ValueError(f"Signal file {path} holds {len(values)} samples, the run needs {samples}")
        logger.debug("Loaded %d samples from %s", len(values), path)
        return SampledSignal(h=h, values=np.asarray(values[:samples]))
    raise ValueError(f"Unknown signal '{source}'. Available signals: ['step', 'file:<path>']")
