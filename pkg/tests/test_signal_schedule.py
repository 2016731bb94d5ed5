import numpy as np
import pytest
from numpy.testing import assert_array_equal

from varorder.oracles import EX1_SCHEDULE
from varorder.schedule import Alignment, OrderSchedule, TimedSchedule, grid_index
from varorder.signal import SampledSignal


def test_times_are_index_times_step():
    f = SampledSignal.unit_step(0.1, 4)
    assert_array_equal(f.times, np.arange(4) * 0.1)
    assert_array_equal(f.values, np.ones(4))
    assert len(f) == 4


def test_signal_from_function():
    f = SampledSignal.from_function(lambda t: 1.0 + t, 0.5, 3)
    assert_array_equal(f.values, [1.0, 1.5, 2.0])


@pytest.mark.parametrize("values", [[], [[1.0, 2.0]]])
def test_signal_shape_rejected(values):
    with pytest.raises(ValueError, match="one-dimensional"):
        SampledSignal(h=0.1, values=np.array(values))


def test_signal_step_rejected():
    with pytest.raises(ValueError, match="Time step"):
        SampledSignal(h=0.0, values=np.ones(3))


def test_order_at_uses_last_segment_started():
    sched = OrderSchedule(segments=((0, -1.0), (4, -2.0)))
    assert sched.order_at(0) == -1.0
    assert sched.order_at(3) == -1.0
    assert sched.order_at(4) == -2.0
    assert sched.order_at(100) == -2.0
    assert not sched.is_constant


def test_constant_schedule():
    sched = OrderSchedule.constant(-0.5)
    assert sched.is_constant
    assert_array_equal(sched.orders(3), [-0.5, -0.5, -0.5])


@pytest.mark.parametrize("segments, message", [
    ((), "at least one"),
    (((1, -1.0),), "index 0"),
    (((0, -1.0), (2, -2.0), (2, -3.0)), "strictly increasing"),
    (((0, -1.0), (1.5, -2.0)), "integer"),
    (((0, 11.0),), "sanity bound"),
])
def test_bad_segments_rejected(segments, message):
    with pytest.raises(ValueError, match=message):
        OrderSchedule(segments=segments)


def test_per_sample_merges_runs():
    sched = OrderSchedule.per_sample([-1, -1, -2, -2, -1])
    assert sched.segments == ((0, -1.0), (2, -2.0), (4, -1.0))
    assert sched.stop_index == 5
    assert_array_equal(sched.orders(5), [-1, -1, -2, -2, -1])


def test_schedule_shorter_than_signal():
    sched = OrderSchedule(segments=((0, -1.0),), stop_index=5)
    with pytest.raises(ValueError, match="covers 5 samples"):
        sched.orders(6)


def test_segment_indices_map_back_to_orders():
    sched = OrderSchedule(segments=((0, -0.5), (2, -1.5), (4, -0.5)))
    distinct, index = sched.segment_indices(6)
    assert_array_equal(distinct[index], sched.orders(6))
    assert len(distinct) == 2


def test_grid_index():
    assert grid_index(0.3, 0.1) == 3
    assert grid_index(4.0, 0.05) == 80
    with pytest.raises(ValueError, match="not a multiple"):
        grid_index(0.33, 0.1)


def test_timed_order_at_is_right_continuous():
    assert EX1_SCHEDULE.order_at(0.0) == -1.0
    assert EX1_SCHEDULE.order_at(0.999) == -1.0
    assert EX1_SCHEDULE.order_at(1.0) == -2.0
    assert EX1_SCHEDULE.order_at(3.5) == -1.0


def test_interval_alignment_starts_after_the_switch_time():
    sched = EX1_SCHEDULE.to_order_schedule(0.5, horizon=4.0)
    assert sched.segments == ((0, -1.0), (3, -2.0), (5, -3.0), (7, -1.0))
    assert sched.stop_index == 9


def test_sample_alignment_starts_on_the_switch_time():
    sched = EX1_SCHEDULE.to_order_schedule(0.5, horizon=4.0, alignment=Alignment.SAMPLE)
    assert sched.segments == ((0, -1.0), (2, -2.0), (4, -3.0), (6, -1.0))


def test_switch_past_horizon_dropped():
    timed = TimedSchedule(((0.0, -1.0), (1.0, -2.0)))
    sched = timed.to_order_schedule(0.5, horizon=0.5)
    assert sched.is_constant
    assert sched.stop_index == 2


def test_off_grid_switch_rejected():
    timed = TimedSchedule(((0.0, -1.0), (0.3, -2.0)))
    with pytest.raises(ValueError, match="switch time 0.3"):
        timed.to_order_schedule(0.25)


@pytest.mark.parametrize("segments, message", [
    (((0.5, -1.0),), "t = 0"),
    (((0.0, -1.0), (1.0, -2.0), (1.0, -3.0)), "strictly increasing"),
])
def test_bad_timed_segments_rejected(segments, message):
    with pytest.raises(ValueError, match=message):
        TimedSchedule(segments)
