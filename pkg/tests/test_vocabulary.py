import numpy as np
import pytest

from simdsl.dsl import program_tokens
from simdsl.exceptions import ConfigurationError
from simdsl.policy import EOS, UNK, Query, Vocabulary

from tests.common import program_source

CONTEXT = "A counter starts at 0 and grows by 2 on every tick."
QUESTION = "What is the counter after 5 ticks?"


@pytest.fixture
def query():
    return Query(CONTEXT, QUESTION)


@pytest.fixture
def vocabulary(query):
    return Vocabulary.build([(program_tokens(program_source("arithmetic")), query)])


def test_query_numbers_in_order_of_appearance():
    query = Query("Mix 3 cups and 3.5 cups, then 3 more.", "How many after 10?")
    assert query.numbers == ("3", "3.5", "10")
    assert "cups" in query.words


def test_layout(vocabulary):
    assert vocabulary.tokens[:2] == (EOS, UNK)
    assert vocabulary.eos_id == 0
    assert "x" in vocabulary
    assert "2" not in vocabulary
    assert vocabulary.copy_slots == 12
    assert len(vocabulary) == 2 + 22 + 1 + 12


def test_numbers_use_copy_slots(vocabulary, query):
    lexemes = program_tokens(program_source("arithmetic"))
    ids = vocabulary.encode(lexemes, query)
    assert vocabulary[ids[lexemes.index("0")]] == "<copy_0>"
    assert vocabulary[ids[lexemes.index("5")]] == "<copy_2>"
    assert vocabulary.decode(ids, query) == lexemes


def test_decode_stops_at_eos(vocabulary, query):
    ids = [vocabulary.index("return"), vocabulary.eos_id, vocabulary.index("x")]
    assert vocabulary.decode(ids, query) == ["return"]


def test_unbound_copy_slot(vocabulary):
    query = Query("no numbers here", "none")
    assert vocabulary.lexeme(vocabulary.index("<copy_0>"), query) == UNK


def test_unknown_lexeme(vocabulary, query):
    assert vocabulary.encode(["zebra"], query) == [vocabulary.unk_id]
    with pytest.raises(ConfigurationError):
        Vocabulary([EOS, "x"]).encode(["zebra"], query)


def test_literal_pool(query):
    vocabulary = Vocabulary.build([(["x", "=", "7", ";"], query)])
    assert "7" in vocabulary


def test_masks(vocabulary, query):
    allowed = vocabulary.allowed_mask(query)
    mentioned = vocabulary.mentioned_mask(query)
    assert allowed[vocabulary.index("<copy_2>")]
    assert not allowed[vocabulary.index("<copy_3>")]
    assert mentioned[vocabulary.index("<copy_0>")]
    assert not mentioned[vocabulary.index("<copy_3>")]
    assert not mentioned[vocabulary.index("x")]
    assert allowed.sum() == len(vocabulary) - 9
    assert mentioned.dtype == np.bool_


def test_coverage(vocabulary, query):
    report = vocabulary.coverage([(["x", "=", "zebra", ";"], query)])
    assert report.total_tokens == 4
    assert report.unknown == {"zebra": 1}
    assert report.unk_rate == 0.25


@pytest.mark.parametrize("tokens", [["x", "y"], [EOS, "x", "x"]])
def test_invalid(tokens):
    with pytest.raises(ConfigurationError):
        Vocabulary(tokens)
