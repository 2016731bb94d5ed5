"""
Evaluation engines for variable-order operators.

Every engine maps a sampled signal and an order schedule to the operator
output and can expose the dense matrix it realises. Engines register
themselves by id so the command line can pick one with --engine.
"""

import logging
from abc import ABC, abstractmethod

from varorder.chain import plan_from_schedule, run_chain
from varorder.derivatives import Definition, deriv_variable
from varorder.engine_registry import register_engine
from varorder.matrix import (
    DEFAULT_DENSE_CAP,
    GlMatrix,
    apply,
    definition_matrix,
    switching_product,
    variable_order_matrix,
)
from varorder.schedule import OrderSchedule
from varorder.signal import SampledSignal

logger = logging.getLogger(__name__)


class Engine(ABC):
    """
    Abstract base class for all engines.

    Attributes:
        engine_id: Registry id, set by register_engine
        description: One-line summary shown by the CLI
    """
    engine_id: str = ""
    description: str = ""

    def __init__(self, dense_cap: int = DEFAULT_DENSE_CAP):
        """
        Initialize an engine.

        Args:
            dense_cap: Largest k for which dense matrices are built
        """
        self.dense_cap = dense_cap

    @abstractmethod
    def evaluate(self, f: SampledSignal, sched: OrderSchedule) -> SampledSignal:
        """
        Apply the operator to a signal.

        Args:
            f: Sampled input
            sched: Order schedule over sample indices

        Returns:
            Output on the same grid
        """
        pass

    @abstractmethod
    def operator_matrix(self, sched: OrderSchedule, k: int, h: float) -> GlMatrix:
        """
        Dense matrix of the operator over samples 0..k.

        Raises:
            DenseCapError: If k exceeds the dense cap
        """
        pass


class DirectEngine(Engine):
    """Row-by-row direct summation for one definition."""
    definition: Definition = Definition.TYPE2

    def evaluate(self, f: SampledSignal, sched: OrderSchedule) -> SampledSignal:
        return deriv_variable(f, sched, self.definition)

    def operator_matrix(self, sched: OrderSchedule, k: int, h: float) -> GlMatrix:
        return definition_matrix(sched, k, h, self.definition, self.dense_cap)


@register_engine("direct1")
class TypeOneEngine(DirectEngine):
    description = "direct sum, every lag uses the current order"
    definition = Definition.TYPE1


@register_engine("direct2")
class TypeTwoEngine(DirectEngine):
    description = "direct sum, each lag uses the order of the sample it weighs"
    definition = Definition.TYPE2


@register_engine("direct3")
class TypeThreeEngine(DirectEngine):
    description = "direct sum, lag r uses the order at time r*h"
    definition = Definition.TYPE3


@register_engine("matrix")
class MatrixEngine(Engine):
    """Dense closed-form type-2 matrix applied to the signal."""
    description = "closed-form type-2 matrix, dense"

    def evaluate(self, f: SampledSignal, sched: OrderSchedule) -> SampledSignal:
        return apply(self.operator_matrix(sched, len(f) - 1, f.h), f)

    def operator_matrix(self, sched: OrderSchedule, k: int, h: float) -> GlMatrix:
        return variable_order_matrix(sched, k, h, self.dense_cap)


@register_engine("chain")
class ChainEngine(Engine):
    """Streaming chain of pre-connected complementary-order blocks."""
    description = "switching block chain, streaming"

    def evaluate(self, f: SampledSignal, sched: OrderSchedule) -> SampledSignal:
        sched.check_covers(len(f))
        plan = plan_from_schedule(sched, len(f))
        logger.debug("Chain plan: initial order %g, %d switches", plan.initial_order, len(plan.steps))
        return run_chain(f, plan)

    def operator_matrix(self, sched: OrderSchedule, k: int, h: float) -> GlMatrix:
        return switching_product(sched, k, h, self.dense_cap)
