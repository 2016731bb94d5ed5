import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose, assert_array_equal

from shared.schedule_io import A3_SCHEDULE
from tests.strategies import orders, schedules, signals
from varorder.derivatives import (
    Definition,
    deriv_const,
    deriv_type1,
    deriv_type2,
    deriv_type3,
    deriv_variable,
    variable_rows,
)
from varorder.matrix import definition_matrix
from varorder.schedule import OrderSchedule
from varorder.signal import SampledSignal
from varorder.weights import gl_weights

ALL_TYPES = [deriv_type1, deriv_type2, deriv_type3]


def test_step_integral_is_running_sum():
    f = SampledSignal.unit_step(1.0, 5)
    assert_array_equal(deriv_const(f, -1).values, [1.0, 2.0, 3.0, 4.0, 5.0])


def test_first_derivative_of_ramp():
    f = SampledSignal.from_function(lambda t: 2.0 * t, 0.5, 4)
    assert_array_equal(deriv_const(f, 1).values, [0.0, 2.0, 2.0, 2.0])


@settings(max_examples=50, deadline=None)
@given(order=orders(-3.0, 3.0), f=signals(30))
def test_constant_schedule_collapses_to_constant_order(order, f):
    expected = deriv_const(f, order).values
    sched = OrderSchedule.constant(order)
    for deriv in ALL_TYPES:
        assert_array_equal(deriv(f, sched).values, expected)


@pytest.mark.parametrize("deriv", ALL_TYPES)
def test_order_zero_is_identity(deriv):
    f = SampledSignal(h=0.1, values=np.array([3.0, -1.5, 2.25, 0.125, 7.0]))
    assert_array_equal(deriv(f, OrderSchedule.constant(0.0)).values, f.values)


@settings(max_examples=30, deadline=None)
@given(data=st.data(), definition=st.sampled_from(list(Definition)),
       a=st.floats(-5, 5), b=st.floats(-5, 5))
def test_linearity(data, definition, a, b):
    n = 25
    sched = data.draw(schedules(n, -2.0, 2.0))
    f = data.draw(signals(n))
    g = data.draw(signals(n))
    combined = SampledSignal(h=f.h, values=a * f.values + b * g.values)

    lhs = deriv_variable(combined, sched, definition).values
    rhs = a * deriv_variable(f, sched, definition).values + b * deriv_variable(g, sched, definition).values
    magnitude = np.abs(definition_matrix(sched, n - 1, f.h, definition).entries)
    bound = magnitude @ (abs(a) * np.abs(f.values) + abs(b) * np.abs(g.values))
    assert np.all(np.abs(lhs - rhs) <= 1e-11 * bound + 1e-300)


@settings(max_examples=30, deadline=None)
@given(data=st.data(), definition=st.sampled_from(list(Definition)))
def test_causality(data, definition):
    n = 20
    sched = data.draw(schedules(n))
    f = data.draw(signals(n))
    m = data.draw(st.integers(min_value=1, max_value=n - 1))
    changed = f.values.copy()
    changed[m:] += 1.0

    before = deriv_variable(f, sched, definition).values
    after = deriv_variable(f.with_values(changed), sched, definition).values
    assert_array_equal(before[:m], after[:m])


@pytest.mark.parametrize("order, expected", [(-1.0, 2.0), (-2.0, 2.0)])
def test_constant_integrals_of_step_at_two_seconds(order, expected):
    f = SampledSignal.unit_step(0.005, 401)
    assert deriv_const(f, order).values[-1] == pytest.approx(expected, abs=0.02)


def test_definitions_diverge_after_an_order_switch():
    h = 0.01
    f = SampledSignal.unit_step(h, 201)
    sched = A3_SCHEDULE.to_order_schedule(h, horizon=2.0)
    second_order_curve = deriv_const(f, -2.0).values[-1]

    type1 = deriv_type1(f, sched).values[-1]
    type2 = deriv_type2(f, sched).values[-1]
    type3 = deriv_type3(f, sched).values[-1]

    assert type1 == pytest.approx(second_order_curve, abs=0.05)
    assert type1 == pytest.approx(2.0, abs=0.05)
    assert abs(type2 - second_order_curve) > 0.1
    assert abs(type3 - second_order_curve) > 0.1
    # type 3 keeps integrating from the value reached at the switch
    assert type3 > type2


def test_type1_jumps_onto_the_new_curve():
    h = 0.01
    f = SampledSignal.unit_step(h, 201)
    sched = A3_SCHEDULE.to_order_schedule(h, horizon=2.0)
    type1 = deriv_type1(f, sched).values
    first = deriv_const(f, -1.0).values
    second = deriv_const(f, -2.0).values
    assert_array_equal(type1[:101], first[:101])
    assert_array_equal(type1[101:], second[101:])


def test_small_switch_matches_block_matrix_product():
    f = SampledSignal.unit_step(1.0, 6)
    sched = OrderSchedule(segments=((0, -1.0), (3, -2.0)))
    assert_array_equal(deriv_type2(f, sched).values, [1.0, 2.0, 3.0, 4.0, 6.0, 9.0])


def test_schedule_shorter_than_signal_rejected():
    f = SampledSignal.unit_step(0.1, 10)
    sched = OrderSchedule(segments=((0, -1.0),), stop_index=5)
    for deriv in ALL_TYPES:
        with pytest.raises(ValueError, match="covers 5 samples"):
            deriv(f, sched)


@settings(max_examples=50, deadline=None)
@given(data=st.data(), n=st.integers(min_value=1, max_value=40),
       h=st.sampled_from([0.1, 0.5, 1.0]), definition=st.sampled_from(list(Definition)))
def test_streamed_rows_equal_table_rows(data, n, h, definition):
    sched = data.draw(schedules(n))
    tabled = [row.copy() for row in variable_rows(sched, h, n, definition)]
    streamed = [row.copy() for row in variable_rows(sched, h, n, definition, table_limit=0)]
    assert len(streamed) == n
    for expected, row in zip(tabled, streamed):
        assert_allclose(row, expected, rtol=1e-14, atol=0)


def test_per_sample_orders_stream_past_the_table_limit():
    rng = np.random.default_rng(7)
    n = 2500
    sched = OrderSchedule.per_sample(rng.uniform(-2.0, -0.2, size=n))
    f = SampledSignal.unit_step(0.01, n)
    out = deriv_type2(f, sched).values
    # row i sums w_{alpha(j)}[i - j] over j <= i
    i = n - 1
    orders_ = sched.orders(n)
    expected = sum(gl_weights(orders_[j], 0.01, i - j + 1).w[-1] for j in range(n))
    assert out[i] == pytest.approx(expected, rel=1e-12)
    assert np.all(np.isfinite(out))


def test_unknown_definition_rejected():
    with pytest.raises(ValueError, match="Unknown definition"):
        variable_rows(OrderSchedule.constant(-1.0), 0.1, 5, "type4")
