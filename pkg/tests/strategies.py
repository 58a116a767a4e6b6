"""Hypothesis strategies for simulation programs."""
from __future__ import annotations

from hypothesis import strategies as st

from simdsl.dsl import (
    ArithOp,
    Assign,
    BinaryExpr,
    CompareOp,
    Condition,
    Identifier,
    If,
    IntLiteral,
    Program,
    RealLiteral,
    Repeat,
    Return,
)

NAMES = ("x", "y", "total", "level2", "t_a")

identifiers = st.sampled_from(NAMES).map(Identifier)

int_literals = st.builds(
    lambda value, negative: IntLiteral(str(value), negative),
    st.integers(min_value=0, max_value=10**6),
    st.booleans(),
)

real_literals = st.builds(
    lambda whole, fraction, negative: RealLiteral(f"{whole}.{fraction}", negative),
    st.integers(min_value=0, max_value=999),
    st.sampled_from(("0", "5", "25", "125", "75")),
    st.booleans(),
)

atoms = st.one_of(identifiers, int_literals, real_literals)

expressions = st.one_of(
    atoms,
    st.builds(BinaryExpr, atoms, st.sampled_from(list(ArithOp)), atoms),
)

assignments = st.builds(Assign, identifiers, expressions)

conditions = st.builds(Condition, identifiers, st.sampled_from(list(CompareOp)), atoms)

repeat_counts = st.integers(min_value=0, max_value=4).map(lambda n: IntLiteral(str(n)))


def statements(depth: int = 2) -> st.SearchStrategy:
    leaves = st.one_of(assignments, st.builds(Return, atoms))
    if depth == 0:
        return leaves
    body = st.lists(statements(depth - 1), min_size=1, max_size=3).map(tuple)
    return st.one_of(
        leaves,
        st.builds(Repeat, repeat_counts, body),
        st.builds(If, conditions, body),
    )


programs = st.lists(statements(), min_size=1, max_size=5).map(
    lambda body: Program(tuple(body))
)
