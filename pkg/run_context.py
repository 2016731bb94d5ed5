"""
Run context shared by every command.

RunConfig holds everything a command needs: the parsed options plus the
derived sample count. Commands read it and never touch argparse directly.
"""

import argparse
from dataclasses import dataclass, field, fields
from typing import List, Optional

from varorder.matrix import DEFAULT_DENSE_CAP
from varorder.schedule import Alignment, OrderSchedule, TimedSchedule, grid_index
from varorder.weights import validate_step

# Direct and chain engines are O(k^2); runs stop at k = 10^5
MAX_SAMPLES = 100_001


@dataclass
class RunConfig:
    """
    Configuration of one command-line run.

    Attributes:
        command: Command name
        engine: Engine id
        h: Time step
        horizon: End time; the run covers samples 0..horizon/h
        schedule: Schedule source (named, @file or inline)
        signal: Signal source ("step" or "file:<path>")
        oracle: Oracle id for compare and sweep
        coefficients: Coefficient mode of the ex2 oracle
        alignment: Grid alignment of switch times
        out: Output path, None for stdout
        dump_matrix: Also write the engine's operator matrix
        hs: Steps for sweep
        tol: Tolerance for check
        order: Order for weights
        count: Coefficient count for weights
        method: Weight method for weights ("recurrence" or "gamma")
        dense_cap: Largest k for dense matrices
        debug: Debug logging
    """
    command: str
    engine: str = "direct2"
    h: float = 0.01
    horizon: float = 4.0
    schedule: Optional[str] = None
    signal: str = "step"
    oracle: Optional[str] = None
    coefficients: str = "exact"
    alignment: Alignment = Alignment.INTERVAL
    out: Optional[str] = None
    dump_matrix: bool = False
    hs: List[float] = field(default_factory=list)
    tol: float = 1e-9
    order: float = -1.0
    count: int = 10
    method: str = "recurrence"
    dense_cap: int = DEFAULT_DENSE_CAP
    debug: bool = False

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> 'RunConfig':
        """Build a config from parsed arguments, ignoring options a command lacks."""
        names = [f.name for f in fields(cls)]
        values = {name: getattr(args, name) for name in names if getattr(args, name, None) is not None}
        if "alignment" in values:
            values["alignment"] = Alignment(values["alignment"])
        return cls(**values)

    @property
    def samples(self) -> int:
        """Number of samples 0..horizon/h."""
        return grid_index(self.horizon, self.h, "horizon") + 1

    def validate(self) -> None:
        """
        Check the config before dispatch.

        Raises:
            ValueError: On a bad step, horizon, tolerance or sample count
        """
        validate_step(self.h)
        if self.horizon < 0:
            raise ValueError(f"Horizon must be non-negative, got {self.horizon}")
        for h in [self.h] + list(self.hs):
            validate_step(h)
            samples = grid_index(self.horizon, h, "horizon") + 1
            if samples > MAX_SAMPLES:
                raise ValueError(f"Run at h = {h} needs {samples} samples, above the limit of {MAX_SAMPLES}")
        if self.tol <= 0:
            raise ValueError(f"Tolerance must be positive, got {self.tol}")
        if self.count < 1:
            raise ValueError(f"Coefficient count must be at least 1, got {self.count}")
        if self.dense_cap < 0:
            raise ValueError(f"Dense cap must be non-negative, got {self.dense_cap}")

    def index_schedule(self, timed: TimedSchedule, h: Optional[float] = None) -> OrderSchedule:
        """Convert a time-based schedule onto the grid of step h (default self.h)."""
        return timed.to_order_schedule(h if h is not None else self.h, self.horizon, self.alignment)
