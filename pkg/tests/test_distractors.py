import math

from hypothesis import given, strategies as st
import pytest

from simdsl.dataset import generate_distractors, make_options
from simdsl.dataset.distractors import displayed_decimals, distractor_bounds
from simdsl.exceptions import DatasetError

golds = st.one_of(
    st.integers(min_value=-(10**6), max_value=10**6).map(float),
    st.floats(min_value=-1000, max_value=1000).map(lambda value: round(value, 2)),
)


def test_integer_gold():
    distractors = generate_distractors(16.0, 7)
    assert len(set(distractors)) == 3
    assert 16.0 not in distractors
    for value in distractors:
        assert 11.2 <= value <= 20.8
        assert value == int(value)


def test_zero_gold():
    distractors = generate_distractors(0.0, 7)
    assert len(set(distractors)) == 3
    assert all(-1.0 <= value <= 1.0 and value != 0.0 for value in distractors)


def test_decimal_gold_keeps_precision():
    for value in generate_distractors(16.5, "seed"):
        assert round(value, 1) == value


def test_small_integer_gold_gains_a_decimal():
    distractors = generate_distractors(2.0, 1)
    assert all(1.4 <= value <= 2.6 for value in distractors)
    assert len(set(distractors)) == 3


def test_deterministic():
    assert generate_distractors(42.0, "0:12") == generate_distractors(42.0, "0:12")
    assert make_options(42.0, 3) == make_options(42.0, 3)


@pytest.mark.parametrize("gold", [math.inf, -math.inf, math.nan])
def test_non_finite_gold(gold):
    with pytest.raises(DatasetError):
        generate_distractors(gold, 0)


def test_make_options():
    options = make_options(16.0, 7)
    assert len(options) == 4
    assert 16.0 in options
    assert list(options) == sorted(options)


@pytest.mark.parametrize(
    "value, decimals", [(16.0, 0), (16.5, 1), (0.25, 2), (1e-9, 6), (1200.0, 0)]
)
def test_displayed_decimals(value, decimals):
    assert displayed_decimals(value) == decimals


def test_bounds():
    assert distractor_bounds(10.0) == pytest.approx((7.0, 13.0))
    assert distractor_bounds(-0.5) == (-1.5, 0.5)


@given(golds, st.integers(min_value=0, max_value=1000))
def test_distractors_are_plausible(gold, seed):
    low, high = distractor_bounds(gold)
    distractors = generate_distractors(gold, seed)
    assert len(set(distractors)) == 3
    for value in distractors:
        assert value != gold
        assert low <= value <= high
