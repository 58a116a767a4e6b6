#
# Copyright 2026 simdsl team
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
"""
Template-generated process simulation questions.

Five process templates cycle through the corpus. Every number the reference
program uses is written in the context or question exactly as the program
spells it, so a policy can copy it. Gold answers come from executing the
program.
"""
from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
import logging
import random

from simdsl.dsl import parse_source, pretty_print
from simdsl.exceptions import DatasetError
from simdsl.interpreter import answer_of, execute

from .distractors import make_options
from .example import DatasetVersion, QAExample, Split

logger = logging.getLogger(__name__)

DEFAULT_CORPUS_SIZE = 200
TEST_EVERY = 5


@dataclass(frozen=True)
class _Draft:
    context: str
    question: str
    program: str


def _heating(rng: random.Random) -> _Draft:
    start = rng.randint(18, 30)
    rise = rng.randint(5, 9)
    limit = rng.randint(60, 95)
    loss = rng.randint(1, 4)
    minutes = rng.randint(16, 24)
    return _Draft(
        f"A beaker of water starts at {start} degrees. A burner raises its "
        f"temperature by {rise} degrees every minute. Whenever the water is "
        f"hotter than {limit} degrees it loses {loss} degrees to the air in "
        "that same minute.",
        f"What is the temperature of the water after {minutes} minutes?",
        f"""
        func simulation() {{
            temperature = {start};
            repeat({minutes}) {{
                temperature = temperature + {rise};
                if (temperature > {limit}) {{
                    temperature = temperature - {loss};
                }}
            }}
            return temperature;
        }}
        """,
    )


def _ratio(rng: random.Random) -> _Draft:
    salt = rng.randint(2, 9)
    flour = rng.choice((100, 200, 250, 500))
    wanted = flour * rng.randint(2, 6)
    return _Draft(
        f"A bread recipe mixes {salt} grams of salt into every {flour} grams "
        "of flour.",
        f"How many grams of salt go into {wanted} grams of flour?",
        f"""
        func simulation() {{
            salt = {salt};
            flour = {flour};
            portions = {wanted} / flour;
            needed = salt * portions;
            return needed;
        }}
        """,
    )


def _evaporation(rng: random.Random) -> _Draft:
    volume = rng.randint(50, 90) * 10
    daily = rng.randint(3, 25) / 2
    days = rng.randint(3, 12)
    return _Draft(
        f"An open pool holds {volume} liters of water. On a hot day "
        f"{daily} liters evaporate.",
        f"How much water is left after {days} hot days?",
        f"""
        func simulation() {{
            water = {volume};
            repeat({days}) {{
                water = water - {daily};
            }}
            return water;
        }}
        """,
    )


def _threshold(rng: random.Random) -> _Draft:
    level = rng.randint(30, 90)
    limit = rng.randint(40, 70)
    drain = rng.randint(5, 25)
    return _Draft(
        f"A rain tank has a safety valve. When the water level is above {limit} "
        f"centimeters the valve drains {drain} centimeters.",
        f"The level reaches {level} centimeters. What is the level after the "
        "valve has acted?",
        f"""
        func simulation() {{
            level = {level};
            if (level > {limit}) {{
                level = level - {drain};
            }}
            return level;
        }}
        """,
    )


def _growth(rng: random.Random) -> _Draft:
    cells = rng.randint(10, 50)
    factor = rng.randint(2, 3)
    hours = rng.randint(2, 8)
    return _Draft(
        f"A bacteria culture starts with {cells} cells. Each hour the number "
        f"of cells is multiplied by {factor}.",
        f"How many cells are there after {hours} hours?",
        f"""
        func simulation() {{
            cells = {cells};
            repeat({hours}) {{
                cells = cells * {factor};
            }}
            return cells;
        }}
        """,
    )


Template = tuple[str, Callable[[random.Random], _Draft], DatasetVersion]

TEMPLATES: tuple[Template, ...] = (
    ("heating", _heating, DatasetVersion.V2),
    ("ratio", _ratio, DatasetVersion.V1),
    ("evaporation", _evaporation, DatasetVersion.V1),
    ("threshold", _threshold, DatasetVersion.V2),
    ("growth", _growth, DatasetVersion.V1),
)


def synthetic_example(index: int, seed: int = 0) -> QAExample:
    name, template, version = TEMPLATES[index % len(TEMPLATES)]
    rng = random.Random(f"{seed}:{index}")
    draft = template(rng)

    program = parse_source(draft.program)
    answer = answer_of(execute(program))
    if answer is None:
        raise DatasetError(f"template {name} produced a program without an answer")

    held_out = (index // len(TEMPLATES)) % TEST_EVERY == TEST_EVERY - 1
    split = Split.TEST if held_out else Split.TRAIN
    return QAExample(
        id=f"synthetic-{seed}-{index:04d}-{name}",
        context=draft.context,
        question=draft.question,
        gold_answer=answer,
        reference_program=pretty_print(program),
        options=make_options(answer, f"{seed}:{index}"),
        split=split,
        version=version,
    )


def generate_synthetic_corpus(
    n: int = DEFAULT_CORPUS_SIZE, seed: int = 0
) -> list[QAExample]:
    """`n` examples, a fifth of each template held out as the test split."""
    examples = [synthetic_example(index, seed) for index in range(n)]
    logger.debug("Generated %d synthetic examples with seed %d", n, seed)
    return examples
