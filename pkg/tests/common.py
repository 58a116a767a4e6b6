from __future__ import annotations

import pathlib

from simdsl.dataset import QAExample
from simdsl.dsl import Program, parse_source
from simdsl.policy import LogLinearPolicy, mle_pretrain
from simdsl.testing import vocabulary_for

FIXTURES = pathlib.Path(__file__).parent / "fixtures"
PROGRAMS = FIXTURES / "programs"


def program_path(name: str) -> pathlib.Path:
    return PROGRAMS / f"{name}.sdsl"


def program_source(name: str) -> str:
    return program_path(name).read_text()


def wrap(body: str) -> Program:
    """Parse statements inside the `func simulation()` wrapper."""
    return parse_source(f"func simulation() {{ {body} }}")


COUNTER = QAExample(
    id="counter",
    context="A counter starts at 0 and grows by 2 on every tick.",
    question="What is the counter after 5 ticks?",
    gold_answer=10.0,
    reference_program=program_source("arithmetic"),
    options=(8.0, 10.0, 12.0, 14.0),
)


def counter_vocabulary():
    return vocabulary_for(
        [(COUNTER.context, COUNTER.question, COUNTER.reference_program)]
    )


def memorised_counter_policy() -> LogLinearPolicy:
    """A policy pre-trained until greedy decoding reproduces COUNTER's program."""
    model = LogLinearPolicy(counter_vocabulary())
    mle_pretrain(model, [COUNTER], epochs=400, learning_rate=0.02)
    return model
