from __future__ import annotations

import pathlib

from hypothesis import settings
import pytest

from simdsl.dataset import QAExample, generate_synthetic_corpus

from tests.common import FIXTURES, program_source

settings.register_profile("default", deadline=None, max_examples=200)
settings.load_profile("default")


@pytest.fixture
def arithmetic_source() -> str:
    return program_source("arithmetic")


@pytest.fixture
def geometric_source() -> str:
    return program_source("geometric")


@pytest.fixture
def dataset_path() -> pathlib.Path:
    return FIXTURES / "dataset.jsonl"


@pytest.fixture(scope="session")
def corpus() -> list[QAExample]:
    return generate_synthetic_corpus(200, seed=0)


@pytest.fixture(scope="session")
def small_corpus(corpus: list[QAExample]) -> list[QAExample]:
    return corpus[:20]
