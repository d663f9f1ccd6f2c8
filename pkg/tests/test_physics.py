import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lightpath.delay_system import DelaySystem, general_system
from lightpath.physics import (
    SPEED_FRACTION_FIBER,
    PhysicalParams,
    cable_lengths_m,
    max_nodes,
    nearest_fit_nodes,
    sizing_report,
    solution_time_s,
    unit_length_m,
)

DEFAULT = PhysicalParams()


@pytest.mark.parametrize(
    "params, expected",
    [
        (PhysicalParams(1e-12, 3e8, 1.0), 3e-4),
        (PhysicalParams(1e-12, 3e8, SPEED_FRACTION_FIBER), 1.8e-4),
        (PhysicalParams(1, 1, 1), 1.0),
    ],
)
def test_unit_length(params, expected):
    assert unit_length_m(params) == pytest.approx(expected, rel=1e-12)


def test_params_validation():
    for bad in ({"time_resolution_s": 0}, {"light_speed_m_s": -1}, {"speed_fraction": 0},
                {"speed_fraction": 1.5}):
        with pytest.raises(ValueError):
            PhysicalParams(**bad)


def test_cable_lengths_five_nodes():
    lengths = cable_lengths_m(general_system(5), DEFAULT)
    # delay * 0.0003 m
    np.testing.assert_allclose(lengths, [0.0048, 0.0072, 0.0084, 0.009, 0.0093], rtol=1e-12)


def test_cable_lengths_single_and_large():
    assert cable_lengths_m(DelaySystem([1]), DEFAULT)[0] == pytest.approx(3e-4, rel=1e-12)
    largest = cable_lengths_m(general_system(40), DEFAULT)[-1]
    assert largest == pytest.approx((2**40 - 1) * 3e-4, rel=1e-12)
    assert 3.2e8 < largest < 3.4e8


@given(st.integers(1, 30))
def test_cable_lengths_keep_ratios(n):
    s = general_system(n)
    lengths = cable_lengths_m(s, DEFAULT)
    assert list(np.argsort(lengths)) == list(range(n))
    np.testing.assert_allclose(lengths / lengths[0], np.array(s.delays) / s.delays[0], rtol=1e-12)


@pytest.mark.parametrize(
    "cable, exact, nearest", [(3e8, 39, 40), (3e5, 29, 30), (1e-4, 0, 0)]
)
def test_max_nodes(cable, exact, nearest):
    assert max_nodes(DEFAULT, cable) == exact
    assert nearest_fit_nodes(DEFAULT, cable) == nearest
    if exact:
        unit = unit_length_m(DEFAULT)
        assert 2**exact * unit <= cable < 2 ** (exact + 1) * unit


def test_max_nodes_exact_power_of_two_boundary():
    p = PhysicalParams(1, 1, 1)
    assert max_nodes(p, 2.0**20) == 20
    assert max_nodes(p, 2.0**20 - 1e-6) == 19
    assert max_nodes(p, 1.999) == 0


@given(st.floats(1e-3, 1e12), st.floats(1e-3, 1e12))
def test_max_nodes_monotone_in_cable(a, b):
    lo, hi = sorted((a, b))
    assert max_nodes(DEFAULT, lo) <= max_nodes(DEFAULT, hi)


@given(st.floats(1e-15, 1e-9), st.floats(1e-15, 1e-9))
def test_max_nodes_nonincreasing_in_resolution(a, b):
    lo, hi = sorted((a, b))
    assert max_nodes(PhysicalParams(lo), 3e5) >= max_nodes(PhysicalParams(hi), 3e5)


@given(st.floats(1e-15, 1e-6))
def test_unit_length_linear_in_resolution(r):
    assert unit_length_m(PhysicalParams(2 * r)) == pytest.approx(2 * unit_length_m(PhysicalParams(r)))


@pytest.mark.parametrize(
    "n, mode, expected",
    [(26, "largest-delay", (2**26 - 1) * 1e-12), (1, "total-sum", 1e-12), (5, "total-sum", 1.29e-10)],
)
def test_solution_time(n, mode, expected):
    assert solution_time_s(n, DEFAULT, mode) == pytest.approx(expected, rel=1e-12)


def test_solution_time_26_nodes_is_tens_of_microseconds():
    assert 6.7e-5 == pytest.approx(solution_time_s(26, DEFAULT), rel=1e-2)


@pytest.mark.parametrize("n", range(2, 60))
def test_total_sum_time_not_shorter(n):
    assert solution_time_s(n, DEFAULT, "total-sum") >= solution_time_s(n, DEFAULT, "largest-delay")


def test_solution_time_errors():
    with pytest.raises(ValueError):
        solution_time_s(0, DEFAULT)
    with pytest.raises(ValueError):
        solution_time_s(3, DEFAULT, "median")


def test_sizing_report():
    r = sizing_report(5, DEFAULT, 3e8)
    d = r.as_dict()
    assert d["delays"] == [16, 24, 28, 30, 31]
    assert d["largest_cable_m"] == pytest.approx(0.0093, rel=1e-12)
    assert (d["max_nodes_nearest"], d["max_nodes_exact"]) == (40, 39)
    assert math.isclose(d["solution_time_total_sum_s"], 1.29e-10, rel_tol=1e-12)
    bare = sizing_report().as_dict()
    assert bare["n"] is None and bare["max_nodes_exact"] is None
