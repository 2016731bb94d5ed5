import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose
from scipy.special import gamma

from tests.strategies import orders
from varorder.oracles import (
    EX1_SCHEDULE,
    EX2_SCHEDULE,
    ORACLE_REGISTRY,
    create_oracle,
    oracle_const_step,
    oracle_ex1,
    oracle_ex2,
    oracle_quadrature,
    piecewise_power_integral,
)
from varorder.schedule import TimedSchedule


def test_registry():
    assert set(ORACLE_REGISTRY) == {"const", "ex1", "ex2"}
    assert create_oracle("ex1").schedule == EX1_SCHEDULE
    with pytest.raises(ValueError, match="Available oracles"):
        create_oracle("ex3")


@pytest.mark.parametrize("t, expected", [
    (0.5, 0.5),
    (1.5, 1.125),
    (2.5, 2.5 ** 3 / 6 - 2.5 ** 2 + 7.5 - 11 / 6),
    (3.5, 0.5 * 3.5 ** 2 - 1.75 - 1 / 3),
])
def test_integer_sequence_pieces(t, expected):
    assert oracle_ex1().evaluate(t) == pytest.approx(expected, abs=1e-14)


@pytest.mark.parametrize("name", ["ex1", "ex2"])
@pytest.mark.parametrize("switch", [1.0, 2.0, 3.0])
def test_branches_meet_at_switch_times(name, switch):
    oracle = create_oracle(name)
    # fractional pieces are only Hoelder continuous at a switch
    left, right = oracle.evaluate([switch - 1e-14, switch + 1e-14])
    assert left == pytest.approx(right, abs=1e-5)


@pytest.mark.parametrize("switch", [1.0, 2.0, 3.0])
def test_printed_coefficients_branches_meet(switch):
    oracle = oracle_ex2(coefficients="paper")
    left, right = oracle.evaluate([switch - 1e-9, switch + 1e-9])
    assert left == pytest.approx(right, abs=5e-3)


def test_printed_coefficients_are_close_to_exact():
    t = np.linspace(0.0, 4.0, 81)
    exact = oracle_ex2().evaluate(t)
    printed = oracle_ex2(coefficients="paper").evaluate(t)
    assert abs(exact[50] - printed[50]) < 1e-3
    assert np.max(np.abs(exact - printed)) < 5e-3


def test_unknown_coefficient_mode():
    with pytest.raises(ValueError, match="coefficient mode"):
        oracle_ex2(coefficients="rounded")


def test_closed_form_matches_segment_integrals():
    t = np.linspace(0.0, 4.0, 401)
    assert_allclose(oracle_ex1().evaluate(t), piecewise_power_integral(EX1_SCHEDULE, t), rtol=0, atol=1e-10)
    assert piecewise_power_integral(EX1_SCHEDULE, 3.5) == pytest.approx(4.0 + 1 / 24, abs=1e-12)


def test_constant_oracle():
    assert create_oracle("const", order=-1.0).evaluate(2.0) == pytest.approx(2.0)
    assert oracle_const_step(-2.0).evaluate(2.0) == pytest.approx(2.0)
    assert oracle_const_step(-0.5).evaluate(4.0) == pytest.approx(2.0 / gamma(1.5))
    with pytest.raises(ValueError, match="negative order"):
        oracle_const_step(0.5)


def test_domain():
    with pytest.raises(ValueError, match="t >= 0"):
        oracle_ex1().evaluate(-0.1)
    with pytest.raises(ValueError, match=r"\[0, 4.0\]"):
        oracle_ex1().evaluate(4.5)
    assert oracle_const_step(-1.0).evaluate(100.0) == pytest.approx(100.0)


def test_positive_orders_rejected():
    sched = TimedSchedule(((0.0, -1.0), (1.0, 0.5)))
    with pytest.raises(ValueError, match="negative"):
        piecewise_power_integral(sched, 2.0)
    with pytest.raises(ValueError, match="negative"):
        oracle_quadrature(sched, 2.0)


def test_step_quadrature_is_closed_form():
    assert oracle_quadrature(EX1_SCHEDULE, 3.5) == pytest.approx(oracle_ex1().evaluate(3.5), abs=1e-10)


@pytest.mark.parametrize("t", [0.7, 2.5, 3.5])
def test_adaptive_quadrature_on_the_step(t):
    value = oracle_quadrature(EX2_SCHEDULE, t, signal=lambda tau: 1.0)
    assert value == pytest.approx(float(oracle_ex2().evaluate(t)), abs=1e-8)


def test_adaptive_quadrature_on_a_ramp():
    # integral of order 1 then order 2 of f(t) = t
    sched = TimedSchedule(((0.0, -1.0), (1.0, -2.0)))
    value = oracle_quadrature(sched, 2.0, signal=lambda tau: tau)
    # int_0^1 tau dtau + int_1^2 tau (2 - tau) dtau
    assert value == pytest.approx(0.5 + 2.0 / 3.0, abs=1e-10)


def test_half_order_quadrature_of_constant():
    value = oracle_quadrature(TimedSchedule(((0.0, -0.5),)), 2.0, signal=lambda tau: 1.0)
    assert value == pytest.approx(math.sqrt(2.0) / gamma(1.5), abs=1e-10)


def test_quadrature_rejects_negative_time():
    with pytest.raises(ValueError, match="t >= 0"):
        oracle_quadrature(EX2_SCHEDULE, -1.0)


@settings(max_examples=50, deadline=None)
@given(order=orders(-3.0, -0.05), t=st.floats(min_value=0.01, max_value=4.0))
def test_quadrature_reproduces_constant_oracle(order, t):
    expected = float(oracle_const_step(order).evaluate(t))
    sched = TimedSchedule(((0.0, order),))
    assert oracle_quadrature(sched, t) == pytest.approx(expected, rel=1e-9, abs=1e-9)
    assert oracle_quadrature(sched, t, signal=lambda tau: 1.0) == pytest.approx(expected, rel=1e-9, abs=1e-9)


@pytest.mark.parametrize("oracle", [
    oracle_ex1(),
    oracle_const_step(-0.3),
    oracle_const_step(-1.0),
    oracle_const_step(-2.7),
])
def test_step_response_is_nondecreasing(oracle):
    values = oracle.evaluate(np.linspace(0.0, 4.0, 4001))
    assert np.all(np.diff(values) >= -1e-12)


@settings(max_examples=50, deadline=None)
@given(values=st.lists(orders(-3.0, -1.0), min_size=1, max_size=5))
def test_integer_or_higher_integrals_are_nondecreasing(values):
    sched = TimedSchedule(tuple((float(j), order) for j, order in enumerate(values)))
    response = piecewise_power_integral(sched, np.linspace(0.0, 5.0, 1001))
    assert np.all(np.diff(response) >= -1e-12 * max(1.0, np.max(np.abs(response))))


def test_fractional_sequence_drops_after_first_switch():
    # the finished order -0.4 segment loses weight faster than order -1.8 adds it
    before, after = oracle_ex2().evaluate([1.0, 1.001])
    assert before == pytest.approx(1.0 / gamma(1.4), rel=1e-12)
    assert after < before - 0.05
