import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lightpath.delay_system import (
    REFERENCE_MINIMAL_SYSTEMS,
    CoefficientVector,
    DelaySystem,
    N_MAX,
    general_system,
    is_valid_system,
    minimal_system,
    representation_count,
    target_time,
    verify_minimality,
)
from lightpath.errors import ResourceLimitError


def brute_count(delays, target):
    """Enumerate every coefficient vector with a_i <= target // d_i."""
    ranges = [range(target // d + 1) for d in delays]
    return sum(
        1 for a in itertools.product(*ranges) if sum(x * d for x, d in zip(a, delays)) == target
    )


def brute_minimal(n, max_bound):
    """All ascending n-subsets of 1..max_bound, ordered by (largest, lexicographic)."""
    candidates = sorted(
        itertools.combinations(range(1, max_bound + 1), n), key=lambda c: (c[-1], c)
    )
    for combo in candidates:
        if brute_count(combo, sum(combo)) == 1:
            return combo
    return None


# -- general_system -------------------------------------------------------


@pytest.mark.parametrize(
    "n, expected",
    [(3, (4, 6, 7)), (1, (1,)), (6, (32, 48, 56, 60, 62, 63))],
)
def test_general_system_examples(n, expected):
    assert general_system(n).delays == expected


@pytest.mark.parametrize("n", range(1, 17))
def test_general_system_total_and_validity(n):
    s = general_system(n)
    assert s.total == (n - 1) * 2**n + 1
    assert is_valid_system(s)


def test_general_system_members_have_nonincreasing_binary_digits():
    for n in range(1, 12):
        for d in general_system(n):
            bits = format(d, f"0{n}b")
            assert bits == "".join(sorted(bits, reverse=True))


def test_general_system_large_n_is_exact():
    s = general_system(62)
    assert s.total == 61 * 2**62 + 1
    assert s.largest == 2**62 - 1
    assert general_system(N_MAX).size == N_MAX


@pytest.mark.parametrize("n", [0, -1, N_MAX + 1])
def test_general_system_range_error(n):
    with pytest.raises(ValueError):
        general_system(n)


def test_delay_system_rejects_bad_input():
    with pytest.raises(ValueError):
        DelaySystem([])
    with pytest.raises(ValueError):
        DelaySystem([0, 1])
    with pytest.raises(ValueError):
        DelaySystem([3, 2])
    with pytest.raises(ValueError):
        DelaySystem([2, 2])


def test_delay_system_line_roundtrip():
    s = general_system(5)
    assert str(s) == "16 24 28 30 31"
    assert DelaySystem.parse(str(s)) == s


# -- representation_count --------------------------------------------------


def test_representation_count_examples():
    assert representation_count(DelaySystem([2, 3]), 5) == 1
    assert representation_count(DelaySystem([2, 3]), 6) == 2
    assert representation_count(DelaySystem([1]), 0) == 1


def test_representation_count_cap():
    with pytest.raises(ResourceLimitError):
        representation_count(general_system(3), 100, cap=100)
    assert representation_count(general_system(3), 99, cap=100) >= 0


def test_representation_count_negative_target():
    with pytest.raises(ValueError):
        representation_count(general_system(3), -1)


def test_representation_count_switches_to_exact_big_integers():
    # partition counts of 3000 into parts 1..40 exceed int64; plain-int recurrence as oracle
    delays = list(range(1, 41))
    target = 3000
    ways = [1] + [0] * target
    for d in delays:
        for t in range(d, target + 1):
            ways[t] += ways[t - d]
    assert ways[target] > 2**63
    assert representation_count(delays, target) == ways[target]


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.integers(1, 30), min_size=1, max_size=5, unique=True),
    st.integers(0, 200),
)
def test_representation_count_matches_enumeration(delays, target):
    assert representation_count(delays, target) == brute_count(delays, target)


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.integers(1, 40), min_size=1, max_size=6, unique=True),
    st.integers(0, 300),
    st.randoms(),
)
def test_representation_count_permutation_invariant(delays, target, rnd):
    shuffled = delays[:]
    rnd.shuffle(shuffled)
    assert representation_count(delays, target) == representation_count(shuffled, target)


def test_agrees_with_enumeration_on_all_small_totals():
    # every ascending system with total <= 200 and at most 3 elements up to 60
    for k in (1, 2, 3):
        for combo in itertools.combinations(range(1, 61), k):
            if sum(combo) > 200:
                continue
            if combo[-1] % 7:  # thin the sweep; still several hundred systems
                continue
            assert representation_count(combo, sum(combo)) == brute_count(combo, sum(combo))


# -- validity --------------------------------------------------------------


@pytest.mark.parametrize(
    "delays, valid", [((4, 6, 7), True), ((1, 2), False), ((2, 3), True)]
)
def test_is_valid_system_examples(delays, valid):
    assert is_valid_system(DelaySystem(delays)) is valid


@pytest.mark.parametrize("n", range(2, 9))
def test_no_other_coefficient_vector_hits_total(n):
    s = general_system(n)
    rng = random.Random(n)
    for _ in range(2000):
        a = [0] * n
        budget = s.total
        order = list(range(n))
        rng.shuffle(order)
        for i in order:
            a[i] = rng.randint(0, budget // s.delays[i])
            budget -= a[i] * s.delays[i]
        vec = CoefficientVector(a)
        if vec.dot(s) == s.total:
            assert vec.is_all_ones()
    assert CoefficientVector([1] * n).dot(s) == s.total


def test_coefficient_vector_checks():
    with pytest.raises(ValueError):
        CoefficientVector([1, -1])
    with pytest.raises(ValueError):
        CoefficientVector([1, 1]).dot(general_system(3))


# -- minimal systems -------------------------------------------------------


@pytest.mark.parametrize(
    "n, bound, expected",
    [(2, 10, (2, 3)), (4, 20, (8, 12, 14, 15)), (3, 3, None)],
)
def test_minimal_system_examples(n, bound, expected):
    found = minimal_system(n, bound)
    assert (found.delays if found else None) == expected


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_minimal_system_matches_brute_force(n):
    bound = 2**n - 1
    assert minimal_system(n, bound).delays == brute_minimal(n, bound)


@pytest.mark.parametrize("n, bound", [(2, 2), (3, 6), (4, 14)])
def test_nothing_below_general_largest(n, bound):
    assert minimal_system(n, bound) is None
    assert brute_minimal(n, bound) is None


@pytest.mark.parametrize("n", range(1, 6))
def test_minimal_system_reference_rows(n):
    assert minimal_system(n, 2**n - 1).delays == REFERENCE_MINIMAL_SYSTEMS[n]


@pytest.mark.parametrize("n, expected", [(2, 3), (1, 1), (4, 15)])
def test_verify_minimality_examples(n, expected):
    assert verify_minimality(n) == expected


def test_verify_minimality_guard():
    with pytest.raises(ResourceLimitError):
        verify_minimality(7)


# -- target_time -----------------------------------------------------------


@pytest.mark.parametrize(
    "delays, arc, expected",
    [((4, 6, 7), 0, 17), ((24, 28, 30, 31), 16, 161), ((1,), 5, 1)],
)
def test_target_time(delays, arc, expected):
    assert target_time(DelaySystem(delays), arc) == expected


def test_target_time_negative_arc():
    with pytest.raises(ValueError):
        target_time(general_system(2), -1)
