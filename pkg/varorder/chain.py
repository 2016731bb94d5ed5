"""
Switched-order block chain.

At every switch a derivative block of complementary order
bar_alpha_j = alpha_j - alpha_{j-1} is pre-connected in front of the blocks
already running. The input enters the newest block first and flows back to
the base block of the initial order, whose output is the chain output.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from varorder.schedule import OrderSchedule
from varorder.signal import SampledSignal
from varorder.weights import MAX_ABS_COMPLEMENTARY_ORDER, gl_weights, validate_order

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SwitchingPlan:
    """
    Complementary-order decomposition of a schedule.

    Attributes:
        initial_order: Order in force from sample 0
        steps: (switch_index, complementary_order) pairs in switch order
    """
    initial_order: float
    steps: Tuple[Tuple[int, float], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "initial_order", validate_order(self.initial_order))
        steps = tuple((int(index), validate_order(bar, MAX_ABS_COMPLEMENTARY_ORDER)) for index, bar in self.steps)
        for (prev, _), (index, _) in zip(steps, steps[1:]):
            if index < prev:
                raise ValueError(f"Switch indices must be non-decreasing, got {prev} then {index}")
        if steps and steps[0][0] < 1:
            raise ValueError(f"Switch indices must be at least 1, got {steps[0][0]}")
        object.__setattr__(self, "steps", steps)

    def order_at(self, i: int) -> float:
        """initial_order plus every complementary order switched in at or before i."""
        return self.initial_order + sum(bar for index, bar in self.steps if index <= i)

    def to_schedule(self) -> OrderSchedule:
        """Rebuild the order schedule."""
        segments = [(0, self.initial_order)]
        order = self.initial_order
        for index, bar in self.steps:
            order = order + bar
            if segments[-1][0] == index:
                segments[-1] = (index, order)
            else:
                segments.append((index, order))
        return OrderSchedule(segments=tuple(segments))


def plan_from_schedule(sched: OrderSchedule, samples: Optional[int] = None) -> SwitchingPlan:
    """
    Decompose a schedule into an initial order and complementary orders.

    Repeated orders give a complementary order of 0 and are skipped: an
    order-0 block is the identity.

    Args:
        sched: Order schedule
        samples: When given, switches at or after this index are dropped
    """
    first = sched.segments[0][1]
    steps = []
    previous = first
    for start, order in sched.segments[1:]:
        if samples is not None and start >= samples:
            break
        bar = order - previous
        if bar != 0.0:
            steps.append((start, bar))
        previous = order
    return SwitchingPlan(initial_order=first, steps=tuple(steps))


class DerivativeBlock:
    """
    One GL block of the chain with its own input history.

    The block passes its input through unchanged until its activation
    sample, then outputs the GL sum over the history collected since then.
    """

    def __init__(self, order: float, activation_index: int, capacity: int, h: float):
        """
        Initialize a block.

        Args:
            order: Block order
            activation_index: First sample the block acts on
            capacity: Largest number of samples the chain will see
            h: Time step
        """
        self.order = order
        self.activation_index = activation_index
        length = max(capacity - activation_index, 1)
        self.weights = gl_weights(order, h, length).w
        self.history = np.empty(length)
        self.count = 0

    def process(self, i: int, sample: float) -> float:
        """
        Feed the sample at index i through the block.

        Args:
            i: Sample index
            sample: Block input at i

        Returns:
            Block output at i
        """
        if i < self.activation_index:
            return sample
        self.history[self.count] = sample
        self.count += 1
        m = self.count
        return float(np.dot(self.weights[:m], self.history[m - 1::-1]))


class SwitchingChain:
    """
    Streaming simulation of the pre-connected block chain.

    Not safe for concurrent use; create one chain per signal.
    """

    def __init__(self, plan: SwitchingPlan, h: float, capacity: int):
        """
        Initialize the chain.

        Args:
            plan: Switching plan
            h: Time step
            capacity: Number of samples the chain will process

        Raises:
            ValueError: If a switch index lies outside the capacity
        """
        self.plan = plan
        self.h = h
        self.capacity = capacity
        self.index = 0
        self.base = DerivativeBlock(plan.initial_order, 0, capacity, h)
        self.blocks: List[DerivativeBlock] = []
        for switch_index, bar in plan.steps:
            if switch_index >= capacity:
                raise ValueError(f"Switch index {switch_index} is outside the signal of {capacity} samples")
            self.blocks.append(DerivativeBlock(bar, switch_index, capacity, h))

    def push(self, sample: float) -> float:
        """
        Process the next input sample.

        Returns:
            Chain output for this sample

        Raises:
            ValueError: If more than capacity samples are pushed
        """
        if self.index >= self.capacity:
            raise ValueError(f"Chain capacity of {self.capacity} samples exhausted")
        value = sample
        # newest block sees the input first
        for block in reversed(self.blocks):
            value = block.process(self.index, value)
        value = self.base.process(self.index, value)
        self.index += 1
        return value


def run_chain(f: SampledSignal, plan: SwitchingPlan) -> SampledSignal:
    """
    Run a signal through the block chain of a plan.

    Args:
        f: Input signal
        plan: Switching plan

    Returns:
        Chain output, equal to the type-2 variable-order operator

    Raises:
        ValueError: If a switch index is outside the signal
    """
    chain = SwitchingChain(plan, f.h, len(f))
    logger.debug("Running chain with %d complementary blocks over %d samples", len(chain.blocks), len(f))
    return f.with_values(np.array([chain.push(sample) for sample in f.values]))
