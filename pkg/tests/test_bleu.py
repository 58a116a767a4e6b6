from hypothesis import given, strategies as st
import pytest

from simdsl.exceptions import ConfigurationError
from simdsl.similarity import bleu

token_lists = st.lists(st.sampled_from(["x", "=", "1", "+", ";", "y"]), max_size=12)


def test_worked_example():
    assert bleu(["a", "b", "c", "d"], ["a", "b", "c", "e"]) == pytest.approx(
        0.6580, abs=1e-3
    )


def test_identical_is_one():
    tokens = ["x", "=", "1", ";"]
    assert bleu(tokens, list(tokens)) == 1.0


def test_disjoint_is_small():
    assert bleu(["a", "b", "c", "d"], ["w", "x", "y", "z"]) < 0.1


def test_empty():
    assert bleu([], ["a"]) == 0.0
    assert bleu(["a"], []) == 0.0


def test_brevity_penalty():
    reference = ["a", "b", "c", "d", "e", "f"]
    assert bleu(reference, ["a", "b", "c"]) < bleu(reference, reference[:5])


def test_bad_max_order():
    with pytest.raises(ConfigurationError):
        bleu(["a"], ["a"], max_order=0)


@given(token_lists, token_lists)
def test_in_unit_interval(reference, candidate):
    assert 0.0 <= bleu(reference, candidate) <= 1.0
