import numpy as np
import pytest

from simdsl.exceptions import ConfigurationError
from simdsl.harness import EvaluationMode, HarnessConfig, gamma_sweep, initial_policy
from simdsl.policy import PolicyConfig
from simdsl.testing import OraclePolicy

from tests.common import COUNTER, memorised_counter_policy

CONFIG = HarnessConfig(n=1, s=1, batch_size=2, beam_width=1, epochs=1, jobs=1)


def test_one_row_per_gamma(small_corpus):
    examples = small_corpus[:4]
    rows = gamma_sweep(
        OraclePolicy.for_examples(examples),
        examples,
        [0.0, 0.5, 1.0],
        CONFIG,
        include_baseline=False,
    )
    assert [row.label for row in rows] == ["gamma=0", "gamma=0.5", "gamma=1"]
    assert [row.gamma for row in rows] == [0.0, 0.5, 1.0]
    assert all(row.accuracy == 1.0 and row.total == 4 for row in rows)
    assert all(row.mean_q == 1.0 for row in rows)


def test_baseline_row(small_corpus):
    examples = small_corpus[:4]
    rows = gamma_sweep(
        OraclePolicy.for_examples(examples),
        examples,
        [0.0, 0.5, 1.0],
        CONFIG,
        test_set=examples[:2],
        mode=EvaluationMode.MULTIPLE_CHOICE,
    )
    assert len(rows) == 4
    baseline = rows[0]
    assert baseline.label == "mle"
    assert baseline.gamma is None
    assert baseline.mean_q is None
    assert baseline.total == 2
    assert baseline.as_dict()["label"] == "mle"


@pytest.mark.parametrize("gamma", [-0.1, 1.1])
def test_gamma_out_of_range(small_corpus, gamma):
    model = OraclePolicy.for_examples(small_corpus)
    with pytest.raises(ConfigurationError):
        gamma_sweep(model, small_corpus, [0.5, gamma], CONFIG)


def test_reproducible_and_leaves_checkpoint(small_corpus):
    examples = small_corpus[:4]
    checkpoint = initial_policy(examples, PolicyConfig(init_scale=0.1, seed=2))
    before = checkpoint.weights.copy()
    config = HarnessConfig(
        n=2, s=1, batch_size=2, beam_width=2, epochs=1, max_len=12, jobs=1
    )

    first = gamma_sweep(checkpoint, examples, [0.0, 1.0], config)
    second = gamma_sweep(checkpoint, examples, [0.0, 1.0], config)

    assert first == second
    np.testing.assert_array_equal(checkpoint.weights, before)


def test_trained_rows_keep_up_with_baseline():
    checkpoint = memorised_counter_policy()
    config = HarnessConfig(n=1, s=1, batch_size=1, beam_width=1, epochs=3, jobs=1)
    rows = gamma_sweep(checkpoint, [COUNTER], [0.0, 0.5, 1.0], config)

    baseline, *trained = rows
    assert baseline.label == "mle"
    assert baseline.accuracy == 1.0
    assert all(row.accuracy >= baseline.accuracy for row in trained)
    assert all(row.mean_q == 1.0 for row in trained)
