import numpy as np
import pytest

from simdsl.exceptions import ConfigurationError, DatasetError
from simdsl.harness import (
    HarnessConfig,
    ScoredCandidate,
    initial_policy,
    reinforce_train,
    select_top,
)
from simdsl.policy import (
    LogLinearPolicy,
    PolicyConfig,
    PolicyTarget,
    Query,
    mean_nll,
    mle_pretrain,
    search,
    to_target,
)
import simdsl.sdjson as sdjson
from simdsl.similarity import RewardScorer, SimilarityScores
from simdsl.testing import FakePolicy, OraclePolicy

from tests.common import COUNTER, memorised_counter_policy

QUERY = Query("context", "question")


def single(**overrides):
    settings = {"n": 1, "s": 1, "batch_size": 1, "beam_width": 1, "jobs": 1}
    settings.update(overrides)
    return HarnessConfig(**settings)


def candidate(q, logprob, source="x"):
    scores = SimilarityScores(q, q, 0.5, q, 1, 1, 1)
    return ScoredCandidate(QUERY, (1,), source, logprob, scores)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"n": 0},
        {"n": 2, "s": 3},
        {"s": 4, "batch_size": 2},
        {"n": 8, "beam_width": 4},
        {"gamma": 1.5},
        {"learning_rate": 0.0},
        {"epochs": -1},
        {"max_steps": 0},
        {"jobs": 0},
    ],
)
def test_invalid_config(kwargs):
    with pytest.raises(ConfigurationError):
        HarnessConfig(**kwargs)


def test_config_reward():
    config = HarnessConfig(gamma=0.25, max_steps=100)
    assert config.reward.gamma == 0.25
    assert config.reward.max_steps == 100
    assert config.with_gamma(0.75).gamma == 0.75
    assert config.with_gamma(0.75).max_steps == 100
    assert single(jobs=3).workers == 3


def test_select_top():
    candidates = [
        candidate(0.5, -1.0, "a"),
        candidate(0.9, -3.0, "b"),
        candidate(0.5, -0.5, "c"),
        candidate(0.5, -0.5, "d"),
    ]
    assert [c.source for c in select_top(candidates, 3)] == ["b", "c", "d"]
    assert [c.source for c in select_top(candidates, 10)] == ["b", "c", "d", "a"]


def test_empty_dataset(small_corpus):
    model = initial_policy(small_corpus)
    with pytest.raises(DatasetError):
        reinforce_train(model, [], single())


class SilentPolicy(FakePolicy):
    """Always decodes the empty program; hands updates to a real policy."""

    def __init__(self, vocabulary, learner):
        super().__init__(vocabulary)
        self.learner = learner

    def reinforce_update(self, batch, learning_rate):
        super().reinforce_update(batch, learning_rate)
        return self.learner.reinforce_update(batch, learning_rate)


def test_zero_reward_leaves_parameters(small_corpus):
    examples = small_corpus[:4]
    learner = initial_policy(examples, PolicyConfig(init_scale=0.2))
    before = learner.weights.copy()
    model = SilentPolicy(learner.vocabulary, learner)

    result = reinforce_train(model, examples, single(batch_size=2, epochs=2))

    assert model.updates == 4
    assert [record.mean_q for record in result.records] == [0.0] * 4
    assert [record.fraction_parseable for record in result.records] == [0.0] * 4
    np.testing.assert_array_equal(learner.weights, before)


def test_single_candidate_step(small_corpus):
    example = small_corpus[0]
    model = initial_policy([example])
    mle_pretrain(model, [example], epochs=60, learning_rate=0.02)
    config = single(max_len=64, learning_rate=0.01)

    expected = model.clone()
    query = expected.vocabulary.query(example.context, example.question)
    [beam] = search(expected, query, 1, 1, config.max_len)
    eos = (expected.vocabulary.eos_id,) if beam.finished else ()
    token_ids = beam.token_ids + eos
    scores = RewardScorer(example.reference_program, config.reward).score(beam.source)
    assert scores.q_combined > 0
    expected.reinforce_update(
        [PolicyTarget(query, token_ids, scores.q_combined)], config.learning_rate
    )

    result = reinforce_train(model, [example], config)
    assert len(result.records) == 1
    assert result.records[0].mean_q == scores.q_combined
    np.testing.assert_array_equal(model.weights, expected.weights)


def test_oracle_log(small_corpus, tmp_path):
    examples = small_corpus[:3]
    model = OraclePolicy.for_examples(examples)
    log_path = tmp_path / "train.jsonl"

    result = reinforce_train(
        model, examples, single(batch_size=2, log_candidates=True), log_path
    )

    assert [record.size for record in result.records] == [2, 1]
    assert [record.mean_q for record in result.records] == [1.0, 1.0]
    assert result.mean_q_by_epoch() == [1.0]
    assert result.pretrain is None

    lines = log_path.read_text().splitlines()
    assert [sdjson.loads(line)["size"] for line in lines] == [2, 1]
    logged = sdjson.loads(lines[0])
    assert logged["epoch"] == 1
    assert logged["fraction_executable"] == 1.0
    assert len(logged["candidates"]) == 2
    assert logged["candidates"][0]["q"] == 1.0


def test_partial_batches_per_epoch(small_corpus):
    examples = small_corpus[:5]
    model = OraclePolicy.for_examples(examples)
    result = reinforce_train(model, examples, single(batch_size=2, epochs=2))
    assert [(r.epoch, r.size) for r in result.records] == [
        (1, 2),
        (1, 2),
        (1, 1),
        (2, 2),
        (2, 2),
        (2, 1),
    ]
    assert [r.batch for r in result.records] == [1, 2, 3, 4, 5, 6]


def test_pretrain_flag(small_corpus):
    examples = small_corpus[:3]
    model = initial_policy(examples)
    config = single(pretrain=True, pretrain_epochs=2, epochs=0)
    result = reinforce_train(model, examples, config)
    assert result.pretrain is not None
    assert result.pretrain.epochs == 2
    assert result.records == []
    assert isinstance(result.model, LogLinearPolicy)
    assert model.weights.any()


def test_rewarded_program_gains_probability():
    model = memorised_counter_policy()
    target = to_target(model.vocabulary, COUNTER)
    nll = [mean_nll(model, [target])]
    mean_q = []
    for seed in range(5):
        result = reinforce_train(model, [COUNTER], single(epochs=2, seed=seed))
        mean_q.extend(result.mean_q_by_epoch())
        nll.append(mean_nll(model, [target]))

    assert mean_q == [1.0] * 10
    assert nll == sorted(nll, reverse=True)
    assert nll[-1] < nll[0]
