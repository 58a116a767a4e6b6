from hypothesis import given, strategies as st
import pytest

from simdsl.dsl import (
    ArithOp,
    Assign,
    BinaryExpr,
    Identifier,
    If,
    IntLiteral,
    Program,
    RealLiteral,
    Repeat,
    Return,
    parse_source,
)
from simdsl.exceptions import LexError, ParseError

from tests.test_tokens import LEXEMES


def diagnostics(source):
    with pytest.raises(ParseError) as exc_info:
        parse_source(source)
    return exc_info.value.diagnostics


def test_smallest_program():
    assert parse_source("func simulation() { return 5; }") == Program(
        (Return(IntLiteral("5")),)
    )


def test_loop_program():
    program = parse_source(
        "func simulation() { x = 1; repeat(3) { x = x * 2; } return x; }"
    )
    assign, repeat, ret = program.body
    assert assign == Assign(Identifier("x"), IntLiteral("1"))
    assert repeat == Repeat(
        IntLiteral("3"),
        (
            Assign(
                Identifier("x"),
                BinaryExpr(Identifier("x"), ArithOp.MUL, IntLiteral("2")),
            ),
        ),
    )
    assert ret == Return(Identifier("x"))


def test_if_program():
    program = parse_source(
        "func simulation() { t = 1.5; if (t >= 1) { t = t - 0.5; } return t; }"
    )
    assert isinstance(program.body[1], If)
    assert program.body[0].rhs == RealLiteral("1.5")


def test_spans_cover_statements():
    source = "func simulation() { return 5; }"
    program = parse_source(source)
    assert program.span == (0, len(source))
    assert program.body[0].span == (20, 29)


def test_repeat_count_must_be_literal():
    (diagnostic,) = diagnostics("func simulation() { repeat(n) { x = 1; } }")
    assert "repeat count" in diagnostic.message
    assert diagnostic.span == (27, 28)


def test_nested_binary_expression():
    (diagnostic,) = diagnostics("func simulation() { x = 1 + 2 + 3; return x; }")
    assert "at most one binary operator" in diagnostic.message


def test_missing_semicolon():
    found = diagnostics("func simulation() { x = 1 return x; }")
    assert "expected ';' after the assignment" in found[0].message


def test_several_diagnostics_in_one_pass():
    found = diagnostics(
        "func simulation() { repeat(n) { x = 1; } y = ; return 5; }"
    )
    assert len(found) == 2
    assert "repeat count" in found[0].message
    assert "expected an identifier or literal" in found[1].message


def test_empty_source():
    (diagnostic,) = diagnostics("")
    assert "end of input" in diagnostic.message


def test_empty_block():
    (diagnostic,) = diagnostics("func simulation() { }")
    assert "at least one statement" in diagnostic.message


def test_trailing_tokens():
    (diagnostic,) = diagnostics("func simulation() { return 5; } return 6;")
    assert "after the end of simulation()" in diagnostic.message


def test_parameters_are_rejected():
    diagnostics("func simulation(x) { return x; }")


def test_return_takes_an_atom():
    (diagnostic,) = diagnostics("func simulation() { return x + 1; }")
    assert "single identifier or literal" in diagnostic.message


def test_keyword_as_value():
    (diagnostic,) = diagnostics("func simulation() { x = repeat; }")
    assert "reserved keyword" in diagnostic.message


def test_negative_literals():
    program = parse_source("func simulation() { x = -3; y = x - -2.5; return y; }")
    assert program.body[0].rhs == IntLiteral("3", negative=True)
    assert program.body[1].rhs.right == RealLiteral("2.5", negative=True)


def test_negation_must_touch_the_literal():
    (diagnostic,) = diagnostics("func simulation() { x = - 3; return x; }")
    assert "no whitespace" in diagnostic.message


def test_negation_of_identifier():
    (diagnostic,) = diagnostics("func simulation() { y = 1; x = -y; return x; }")
    assert "negation only applies" in diagnostic.message


def test_int_literal_range():
    parse_source("func simulation() { x = -9223372036854775808; return x; }")
    parse_source("func simulation() { x = 9223372036854775807; return x; }")
    (diagnostic,) = diagnostics(
        "func simulation() { x = 9223372036854775808; return x; }"
    )
    assert "64 bits" in diagnostic.message


def test_huge_int_literal():
    (diagnostic,) = diagnostics(
        "func simulation() { x = " + "9" * 5000 + "; return x; }"
    )
    assert "64 bits" in diagnostic.message
    (diagnostic,) = diagnostics(
        "func simulation() { x = -" + "1" * 20 + "; return x; }"
    )
    assert "64 bits" in diagnostic.message


def test_leading_zeros_do_not_count_towards_the_range():
    program = parse_source("func simulation() { x = " + "0" * 30 + "42; return x; }")
    assert program.body[0].rhs.value == 42


def test_real_literal_must_be_finite():
    huge = "1" * 400 + ".5"
    (diagnostic,) = diagnostics(f"func simulation() {{ x = {huge}; return x; }}")
    assert "too large for a double" in diagnostic.message
    (diagnostic,) = diagnostics(f"func simulation() {{ x = -{huge}; return x; }}")
    assert "too large for a double" in diagnostic.message


def test_token_limit():
    body = "x = 1; " * 10
    with pytest.raises(ParseError) as exc_info:
        parse_source(f"func simulation() {{ {body} }}", max_tokens=20)
    assert "exceeds 20 tokens" in exc_info.value.diagnostics[0].message


def test_diagnostic_format():
    source = "func simulation() {\n  repeat(n) { x = 1; }\n}"
    (diagnostic,) = diagnostics(source)
    assert diagnostic.format(source, "prog.sdsl").startswith(
        "prog.sdsl:2:10: error: repeat count"
    )


@given(st.lists(st.sampled_from(LEXEMES), max_size=40))
def test_never_panics(soup):
    source = " ".join(soup)
    try:
        parse_source(source)
    except (LexError, ParseError):
        pass
