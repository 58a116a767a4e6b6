import pytest

from simdsl.dataset import (
    Complexity,
    classify_complexity,
    classify_program,
    load_dataset,
)

from tests.common import wrap


@pytest.mark.parametrize(
    "body, label, changes",
    [
        (
            "t = 0; repeat(8) { t = t + 1; if (t > 100) { t = 0; } u = t; }",
            Complexity.COMPLEX,
            17,
        ),
        ("a = 2; b = 3; c = a * b; d = c + 1; return d;", Complexity.SIMPLE, 4),
        ("a = 2; if (a > 1) { a = 1; } return a;", Complexity.SIMPLE, 2),
        ("a = 1; b = 1; c = 1; d = 1; e = 1; f = 1; return f;", Complexity.OTHER, 6),
        ("x = 0; repeat(2) { x = 1; } return x;", Complexity.OTHER, 3),
        ("a = 2; if (a > 1) { a = 1; } if (a > 0) { a = 0; }", Complexity.OTHER, 3),
        ("t = 0; repeat(7) { t = t + 1; if (t > 3) { t = t; } }", Complexity.OTHER, 12),
    ],
)
def test_classify_program(body, label, changes):
    result = classify_program(wrap(body))
    assert result.label is label
    assert result.state_changes == changes


def test_sixteen_changes_or_more_is_complex():
    body = "t = 0; u = 0; repeat(7) { t = t + 1; u = u + 1; } if (t > 3) { t = 0; }"
    result = classify_program(wrap(body))
    assert result.state_changes == 17
    assert result.label is Complexity.COMPLEX

    body = "t = 0; repeat(7) { t = t + 1; u = t; } if (t > 3) { t = 0; }"
    result = classify_program(wrap(body))
    assert result.state_changes == 16
    assert result.label is Complexity.COMPLEX


def test_fifteen_changes_is_not_complex():
    body = "t = 0; repeat(7) { t = t + 1; u = t; } if (t > 30) { t = 0; }"
    result = classify_program(wrap(body))
    assert result.state_changes == 15
    assert result.label is Complexity.OTHER


def test_classify_example(dataset_path):
    examples, _ = load_dataset(dataset_path)
    labels = {example.id: classify_complexity(example) for example in examples}
    assert labels["five"].label is Complexity.SIMPLE
    assert labels["series"].label is Complexity.OTHER
    assert labels["cooling"].as_dict() == {
        "label": "other",
        "if_branches": 1,
        "loop_branches": 1,
        "state_changes": 5,
    }
