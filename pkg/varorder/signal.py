"""Uniformly sampled signals."""

from dataclasses import dataclass
from typing import Callable

import numpy as np

from varorder.weights import validate_step


@dataclass(frozen=True)
class SampledSignal:
    """
    A real signal sampled on the grid t_i = i * h, i = 0..len-1.

    Attributes:
        h: Time step (seconds)
        values: Samples, values[i] = f(i * h)
    """
    h: float
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "h", validate_step(self.h))
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 1 or len(values) < 1:
            raise ValueError(f"Signal needs a one-dimensional array of at least one sample, got shape {values.shape}")
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return len(self.values)

    @property
    def times(self) -> np.ndarray:
        """Sample times, computed as i * h (never by accumulation)."""
        return np.arange(len(self.values)) * self.h

    @classmethod
    def unit_step(cls, h: float, samples: int, value_at_zero: float = 1.0) -> 'SampledSignal':
        """
        Unit step 1(t) sampled at `samples` points.

        Args:
            h: Time step
            samples: Number of samples
            value_at_zero: Sample at t = 0; 0 when sample i stands for the
                interval ((i-1)h, ih], since the causal step vanishes before 0
        """
        if samples < 1:
            raise ValueError(f"Signal needs at least one sample, got {samples}")
        values = np.ones(samples)
        values[0] = value_at_zero
        return cls(h=h, values=values)

    @classmethod
    def from_function(cls, func: Callable[[np.ndarray], np.ndarray], h: float, samples: int) -> 'SampledSignal':
        """Sample a vectorised function on the grid."""
        return cls(h=h, values=func(np.arange(samples) * h))

    def with_values(self, values: np.ndarray) -> 'SampledSignal':
        """Return a signal on the same grid with new values."""
        return SampledSignal(h=self.h, values=values)
