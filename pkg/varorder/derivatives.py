"""Direct-summation evaluators of constant and variable order GL operators."""

import logging
from enum import Enum
from typing import Callable, Iterable, Iterator

import numpy as np

from varorder.schedule import OrderSchedule
from varorder.signal import SampledSignal
from varorder.weights import gl_weights, validate_order

logger = logging.getLogger(__name__)

# Direct summation is O(k^2); warn above this many samples
DIRECT_WARN_SAMPLES = 20_000
# Largest distinct-orders x samples weight table; larger runs stream their rows
WEIGHT_TABLE_LIMIT = 2 ** 22


class Definition(Enum):
    """Which order multiplies which past sample."""
    TYPE1 = "type1"  # current order alpha(ih) for every lag
    TYPE2 = "type2"  # order of the past sample alpha((i-r)h)
    TYPE3 = "type3"  # order at absolute time alpha(rh)


def weight_table(distinct_orders: np.ndarray, h: float, samples: int) -> np.ndarray:
    """Row d holds GL weights of distinct_orders[d] for lags 0..samples-1."""
    table = np.empty((len(distinct_orders), samples))
    for d, order in enumerate(distinct_orders):
        table[d] = gl_weights(order, h, samples).w
    return table


def _gl_sum(f: SampledSignal, rows: Iterable[np.ndarray]) -> SampledSignal:
    """
    Evaluate out[i] = sum_r c_i[r] * f[i - r] row by row.

    Every engine funnels through this loop so that identical coefficients
    produce bit-identical sums.
    """
    n = len(f)
    if n > DIRECT_WARN_SAMPLES:
        logger.warning("Direct summation over %d samples is O(k^2) and may be slow", n)
    values = f.values
    out = np.empty(n)
    for i, row in enumerate(rows):
        out[i] = np.dot(row, values[i::-1])
    return f.with_values(out)


def deriv_const(f: SampledSignal, order: float) -> SampledSignal:
    """
    Constant-order GL derivative (order > 0) or integral (order < 0).

    Computes the finite-h sum out[i] = sum_{r=0..i} w[r] * f[(i - r)h];
    no limit is taken.

    Args:
        f: Sampled input
        order: Derivative order

    Returns:
        Output samples on the same grid
    """
    order = validate_order(order)
    w = gl_weights(order, f.h, len(f)).w
    return _gl_sum(f, (w[:i + 1] for i in range(len(f))))


def _table_row(table: np.ndarray, index: np.ndarray,
               definition: Definition) -> Callable[[int], np.ndarray]:
    lags = np.arange(table.shape[1])
    match definition:
        case Definition.TYPE1:
            return lambda i: table[index[i], :i + 1]
        case Definition.TYPE2:
            return lambda i: table[index[i::-1], lags[:i + 1]]
        case _:
            return lambda i: table[index[:i + 1], lags[:i + 1]]


def _type2_stream(orders: np.ndarray, h: float) -> Iterator[np.ndarray]:
    # current[j] holds w_{alpha(j)}[i - j], advanced by the weight recurrence
    n = len(orders)
    current = np.empty(n)
    for i in range(n):
        if i:
            lags = i - np.arange(i, dtype=float)
            current[:i] *= 1.0 - (orders[:i] + 1.0) / lags
        current[i] = h ** (-float(orders[i]))
        yield current[i::-1]


def _streamed_rows(distinct: np.ndarray, index: np.ndarray, h: float,
                   definition: Definition) -> Iterator[np.ndarray]:
    """Rows computed on demand in O(n) memory, equal to the table rows."""
    n = len(index)
    match definition:
        case Definition.TYPE1:
            return (gl_weights(distinct[index[i]], h, i + 1).w for i in range(n))
        case Definition.TYPE2:
            return _type2_stream(distinct[index], h)
        case _:
            # the lag-r coefficient uses alpha(r) whatever the row
            coefficients = np.empty(n)
            for d, order in enumerate(distinct):
                lags = np.flatnonzero(index == d)
                coefficients[lags] = gl_weights(order, h, lags[-1] + 1).w[lags]
            return (coefficients[:i + 1] for i in range(n))


def variable_rows(sched: OrderSchedule, h: float, n: int, definition: Definition,
                  table_limit: int = WEIGHT_TABLE_LIMIT) -> Iterator[np.ndarray]:
    """
    Coefficient rows of a variable-order operator, in row order.

    Schedules with few distinct orders slice a precomputed weight table.
    When distinct orders x n exceeds table_limit the rows are computed on
    demand instead, so memory stays O(n). A yielded row may be overwritten
    once the next row is requested.

    Args:
        sched: Order schedule over sample indices
        h: Time step
        n: Number of samples
        definition: Which order each coefficient uses
        table_limit: Largest weight table to allocate

    Returns:
        Iterator over c_0, ..., c_{n-1}, where c_i[r] multiplies f[i - r]

    Raises:
        ValueError: If the schedule is shorter than n samples
    """
    if not isinstance(definition, Definition):
        raise ValueError(f"Unknown definition {definition!r}")
    distinct, index = sched.segment_indices(n)
    if len(distinct) * n <= table_limit:
        logger.debug("Tabulated %s rows over %d samples with %d distinct orders", definition.value, n, len(distinct))
        row = _table_row(weight_table(distinct, h, n), index, definition)
        return (row(i) for i in range(n))
    logger.debug("Streaming %s rows over %d samples with %d distinct orders", definition.value, n, len(distinct))
    return _streamed_rows(distinct, index, h, definition)


def deriv_variable(f: SampledSignal, sched: OrderSchedule, definition: Definition) -> SampledSignal:
    """
    Variable-order GL operator for one of the three definitions.

    Args:
        f: Sampled input
        sched: Order schedule over sample indices
        definition: Which order each coefficient uses

    Returns:
        Output samples on the same grid

    Raises:
        ValueError: If the schedule is shorter than the signal
    """
    return _gl_sum(f, variable_rows(sched, f.h, len(f), definition))


def deriv_type1(f: SampledSignal, sched: OrderSchedule) -> SampledSignal:
    """Type-1 variable order: all coefficients use the current order alpha(ih)."""
    return deriv_variable(f, sched, Definition.TYPE1)


def deriv_type2(f: SampledSignal, sched: OrderSchedule) -> SampledSignal:
    """Type-2 variable order: the coefficient for lag r uses alpha((i - r)h)."""
    return deriv_variable(f, sched, Definition.TYPE2)


def deriv_type3(f: SampledSignal, sched: OrderSchedule) -> SampledSignal:
    """Type-3 variable order: the coefficient for lag r uses alpha(rh)."""
    return deriv_variable(f, sched, Definition.TYPE3)
