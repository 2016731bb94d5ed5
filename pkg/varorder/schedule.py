"""Piecewise-constant order schedules."""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

import numpy as np

from varorder.weights import validate_order, validate_step

# Relative slack when deciding whether a time lies on the sample grid
GRID_TOLERANCE = 1e-9


class Alignment(Enum):
    """How a switch time maps onto the sample grid."""
    # The first sample after the switch time takes the new order: sample j
    # weighs the kernel over ((j-1)h, jh], so it belongs to the interval it closes.
    INTERVAL = "interval"
    # The sample at the switch time takes the new order.
    SAMPLE = "sample"


def grid_index(t: float, h: float, what: str = "time") -> int:
    """
    Convert a time lying on the grid into its sample index.

    Args:
        t: Time in seconds
        h: Time step
        what: Name of the quantity, used in the error message

    Returns:
        Integer index i with i * h == t up to GRID_TOLERANCE

    Raises:
        ValueError: If t is not a multiple of h
    """
    ratio = t / h
    index = int(round(ratio))
    if abs(ratio - index) > GRID_TOLERANCE * max(1.0, abs(ratio)):
        raise ValueError(f"{what} {t} is not a multiple of the step h = {h}")
    return index


@dataclass(frozen=True)
class OrderSchedule:
    """
    Order alpha(i) that is piecewise constant over sample indices.

    Attributes:
        segments: (start_index, order) pairs, first start_index 0, strictly increasing
        stop_index: Number of samples the schedule covers, or None for unbounded
    """
    segments: Tuple[Tuple[int, float], ...]
    stop_index: Optional[int] = None

    def __post_init__(self):
        if not self.segments:
            raise ValueError("Schedule needs at least one segment")
        cleaned = []
        for start, order in self.segments:
            if int(start) != start:
                raise ValueError(f"Segment start {start!r} is not an integer sample index")
            cleaned.append((int(start), validate_order(order)))
        if cleaned[0][0] != 0:
            raise ValueError(f"First segment must start at index 0, got {cleaned[0][0]}")
        for (prev, _), (start, _) in zip(cleaned, cleaned[1:]):
            if start <= prev:
                raise ValueError(f"Segment starts must be strictly increasing, got {prev} then {start}")
        if self.stop_index is not None and self.stop_index <= cleaned[-1][0]:
            raise ValueError(f"stop_index {self.stop_index} does not cover the last segment start {cleaned[-1][0]}")
        object.__setattr__(self, "segments", tuple(cleaned))

    @classmethod
    def constant(cls, order: float, stop_index: Optional[int] = None) -> 'OrderSchedule':
        """Single-segment schedule."""
        return cls(segments=((0, order),), stop_index=stop_index)

    @classmethod
    def per_sample(cls, orders: Sequence[float]) -> 'OrderSchedule':
        """Schedule from one order per sample; runs of equal orders are merged."""
        segments = []
        for i, order in enumerate(orders):
            if not segments or segments[-1][1] != order:
                segments.append((i, float(order)))
        return cls(segments=tuple(segments), stop_index=len(orders))

    @property
    def is_constant(self) -> bool:
        return len(self.segments) == 1

    def order_at(self, i: int) -> float:
        """Order of the last segment with start_index <= i."""
        if i < 0:
            raise ValueError(f"Sample index must be non-negative, got {i}")
        current = self.segments[0][1]
        for start, order in self.segments:
            if start > i:
                break
            current = order
        return current

    def check_covers(self, samples: int) -> None:
        """
        Raise if the schedule is shorter than a signal of `samples` samples.

        Raises:
            ValueError: If stop_index is set and smaller than samples
        """
        if self.stop_index is not None and self.stop_index < samples:
            raise ValueError(f"Schedule covers {self.stop_index} samples but the signal has {samples}")

    def orders(self, samples: int) -> np.ndarray:
        """Per-sample orders for indices 0..samples-1."""
        self.check_covers(samples)
        out = np.empty(samples)
        bounds = [start for start, _ in self.segments[1:]] + [samples]
        for (start, order), stop in zip(self.segments, bounds):
            if start >= samples:
                break
            out[start:min(stop, samples)] = order
        return out

    def segment_indices(self, samples: int) -> Tuple[np.ndarray, np.ndarray]:
        """
        Distinct orders and the per-sample index into them.

        Returns:
            (distinct_orders, index) with distinct_orders[index[i]] == orders(samples)[i]
        """
        distinct, index = np.unique(self.orders(samples), return_inverse=True)
        return distinct, index


@dataclass(frozen=True)
class TimedSchedule:
    """
    Order alpha(t) piecewise constant in time (seconds).

    Attributes:
        segments: (t_start, order) pairs, first t_start 0, strictly increasing
    """
    segments: Tuple[Tuple[float, float], ...]

    def __post_init__(self):
        if not self.segments:
            raise ValueError("Schedule needs at least one segment")
        cleaned = [(float(t), validate_order(order)) for t, order in self.segments]
        if cleaned[0][0] != 0.0:
            raise ValueError(f"First segment must start at t = 0, got {cleaned[0][0]}")
        for (prev, _), (start, _) in zip(cleaned, cleaned[1:]):
            if start <= prev:
                raise ValueError(f"Segment times must be strictly increasing, got {prev} then {start}")
        object.__setattr__(self, "segments", tuple(cleaned))

    @property
    def starts(self) -> np.ndarray:
        return np.array([t for t, _ in self.segments])

    @property
    def values(self) -> np.ndarray:
        return np.array([order for _, order in self.segments])

    def order_at(self, t: float) -> float:
        """Order in force at time t (right-continuous)."""
        position = np.searchsorted(self.starts, t, side="right") - 1
        return float(self.values[max(position, 0)])

    def to_order_schedule(self, h: float, horizon: Optional[float] = None,
                          alignment: Alignment = Alignment.INTERVAL) -> OrderSchedule:
        """
        Map switch times onto sample indices.

        Args:
            h: Time step
            horizon: End time; when given the schedule covers horizon / h + 1 samples
            alignment: Grid alignment of switch times

        Returns:
            Equivalent OrderSchedule

        Raises:
            ValueError: If a switch time or the horizon is off the grid
        """
        h = validate_step(h)
        offset = 1 if alignment is Alignment.INTERVAL else 0
        stop = None if horizon is None else grid_index(horizon, h, "horizon") + 1
        segments = [(0, self.segments[0][1])]
        for t, order in self.segments[1:]:
            start = grid_index(t, h, "switch time") + offset
            if stop is not None and start >= stop:
                # switch beyond the last sample
                break
            segments.append((start, order))
        return OrderSchedule(segments=tuple(segments), stop_index=stop)
