import numpy as np
import pytest

from simdsl.exceptions import CheckpointError
from simdsl.policy import (
    LogLinearPolicy,
    PolicyConfig,
    load_checkpoint,
    save_checkpoint,
)
from simdsl.policy.checkpoint import checkpoint_data
import simdsl.sdjson as sdjson
from simdsl.testing import FakePolicy, vocabulary_for

from tests.common import program_source


@pytest.fixture
def model():
    vocabulary = vocabulary_for(
        [("Start at 0, add 2, 5 times.", "What is x?", program_source("arithmetic"))]
    )
    config = PolicyConfig(context_buckets=16, init_scale=0.3, seed=9)
    return LogLinearPolicy(vocabulary, config)


def test_round_trip(model, tmp_path):
    location = tmp_path / "nested" / "policy.json"
    save_checkpoint(model, location)

    restored = load_checkpoint(location)
    assert restored.vocabulary == model.vocabulary
    assert restored.config == model.config
    np.testing.assert_array_equal(restored.weights, model.weights)


def test_sparse_weights(tmp_path):
    model = LogLinearPolicy(vocabulary_for([]))
    model.weights[[3, 17]] = [0.5, -1.25]
    data = checkpoint_data(model)
    assert data["weights"] == {"indices": [3, 17], "values": [0.5, -1.25]}

    location = tmp_path / "policy.json"
    save_checkpoint(model, location)
    np.testing.assert_array_equal(load_checkpoint(location).weights, model.weights)


@pytest.mark.parametrize(
    "change",
    [
        {"magic": "something-else"},
        {"version": 2},
        {"model": "transformer"},
        {"size": 3},
        {"vocabulary": ["x"]},
        {"config": {"context_buckets": 0}},
    ],
)
def test_rejects_bad_checkpoints(model, tmp_path, change):
    location = tmp_path / "policy.json"
    location.write_text(sdjson.dumps({**checkpoint_data(model), **change}))
    with pytest.raises(CheckpointError):
        load_checkpoint(location)


def test_rejects_missing_weights(model, tmp_path):
    data = dict(checkpoint_data(model))
    del data["weights"]
    location = tmp_path / "policy.json"
    location.write_text(sdjson.dumps(data))
    with pytest.raises(CheckpointError):
        load_checkpoint(location)


def test_rejects_non_json(tmp_path):
    location = tmp_path / "policy.json"
    location.write_text("@@@")
    with pytest.raises(CheckpointError):
        load_checkpoint(location)


def test_missing_file(tmp_path):
    with pytest.raises(CheckpointError):
        load_checkpoint(tmp_path / "missing.json")


def test_rejects_non_utf8(tmp_path):
    location = tmp_path / "policy.json"
    location.write_bytes(b"\xff\xfe\x00{")
    with pytest.raises(CheckpointError):
        load_checkpoint(location)


def test_only_log_linear_policies_are_saved(model, tmp_path):
    fake = FakePolicy(model.vocabulary, [(program_source("arithmetic"), 1.0)])
    with pytest.raises(CheckpointError, match="FakePolicy"):
        save_checkpoint(fake, tmp_path / "policy.json")
    assert not (tmp_path / "policy.json").exists()
