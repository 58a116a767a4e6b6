import pytest

from simdsl.utils import answers_match, nearest_option, ordered_map


@pytest.mark.parametrize(
    "predicted, gold, expected",
    [
        (16.0, 16.0, True),
        (16.0000001, 16.0, True),
        (16.001, 16.0, True),
        (16.01, 16.0, False),
        (5e-7, 0.0, True),
        (5e-6, 0.0, False),
        (None, 16.0, False),
    ],
)
def test_answers_match(predicted, gold, expected):
    assert answers_match(predicted, gold) is expected


def test_nearest_option():
    assert nearest_option(16.9, [12.0, 16.0, 18.0, 20.0]) == 16.0
    assert nearest_option(17.0, [12.0, 16.0, 18.0, 20.0]) == 16.0
    assert nearest_option(-3.0, [12.0, 16.0]) == 12.0


@pytest.mark.parametrize("workers", [1, 4])
def test_ordered_map_keeps_order(workers):
    def square(value):
        return value * value

    expected = [value * value for value in range(20)]
    assert ordered_map(square, list(range(20)), workers) == expected
    assert ordered_map(square, [3], workers) == [9]
    assert ordered_map(square, [], workers) == []
