import numpy as np
import pytest

from simdsl.dsl import program_tokens
from simdsl.exceptions import ConfigurationError
from simdsl.policy import (
    EOS,
    LogLinearPolicy,
    PolicyConfig,
    PolicyTarget,
    Query,
    Vocabulary,
    loglinear_gradient_check,
)

from tests.common import program_source

QUERY = Query(
    "A counter starts at 0 and grows by 2 on every tick.",
    "What is the counter after 5 ticks?",
)


@pytest.fixture
def vocabulary():
    return Vocabulary.build([(program_tokens(program_source("arithmetic")), QUERY)])


def target_for(vocabulary, source, weight=1.0):
    ids = vocabulary.encode(program_tokens(source), QUERY)
    return PolicyTarget(QUERY, (*ids, vocabulary.eos_id), weight)


def test_distributions_are_normalised(vocabulary):
    model = LogLinearPolicy(vocabulary, PolicyConfig(init_scale=0.5, seed=4))
    log_dists = model.next_log_dists(QUERY, [[], [2], [2, 3, 4]])
    assert log_dists.shape == (3, len(vocabulary))
    np.testing.assert_allclose(np.exp(log_dists).sum(axis=1), 1.0)


def test_uniform_at_zero_weights(vocabulary):
    model = LogLinearPolicy(vocabulary)
    dist = model.next_dist(QUERY, [])
    allowed = vocabulary.allowed_mask(QUERY)
    np.testing.assert_allclose(dist[allowed], 1.0 / allowed.sum())
    assert not dist[~allowed].any()


def test_sequence_logprob(vocabulary):
    model = LogLinearPolicy(vocabulary)
    target = target_for(vocabulary, program_source("return5"))
    expected = -len(target.token_ids) * np.log(len(vocabulary) - 9)
    assert model.sequence_logprob(QUERY, target.token_ids) == pytest.approx(expected)
    assert model.sequence_logprob(QUERY, ()) == 0.0


def test_gradient_check_at_zero(vocabulary):
    model = LogLinearPolicy(vocabulary)
    target = target_for(vocabulary, program_source("arithmetic"))
    assert loglinear_gradient_check(model, target) < 1e-4


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_gradient_check_random_weights(vocabulary, seed):
    model = LogLinearPolicy(vocabulary, PolicyConfig(init_scale=0.5, seed=seed))
    target = target_for(vocabulary, program_source("arithmetic"))
    assert loglinear_gradient_check(model, target, seed=seed) < 1e-4


def test_single_token_vocabulary():
    model = LogLinearPolicy(Vocabulary([EOS]))
    query = Query("", "")
    assert model.sequence_logprob(query, (0,)) == 0.0
    assert not model.log_prob_gradient(query, (0,)).any()
    assert loglinear_gradient_check(model, PolicyTarget(query, (0,))) == 0.0


def test_zero_reward_is_a_no_op(vocabulary):
    model = LogLinearPolicy(vocabulary, PolicyConfig(init_scale=0.1))
    before = model.weights.copy()
    batch = [target_for(vocabulary, program_source("arithmetic"), weight=0.0)]
    assert model.reinforce_update(batch, 0.5) == 0.0
    np.testing.assert_array_equal(model.weights, before)


def test_unit_reward_equals_mle(vocabulary):
    reinforce = LogLinearPolicy(vocabulary, PolicyConfig(init_scale=0.1))
    mle = reinforce.clone()
    batch = [
        target_for(vocabulary, program_source("arithmetic")),
        target_for(vocabulary, program_source("return5")),
    ]
    assert reinforce.reinforce_update(batch, 0.05) == mle.mle_update(batch, 0.05)
    np.testing.assert_array_equal(reinforce.weights, mle.weights)


def test_mle_ignores_weights(vocabulary):
    weighted = LogLinearPolicy(vocabulary)
    plain = weighted.clone()
    source = program_source("return5")
    weighted.mle_update([target_for(vocabulary, source, weight=0.3)], 0.05)
    plain.mle_update([target_for(vocabulary, source)], 0.05)
    np.testing.assert_array_equal(weighted.weights, plain.weights)


def test_mle_update_reduces_loss(vocabulary):
    model = LogLinearPolicy(vocabulary)
    target = target_for(vocabulary, program_source("arithmetic"))
    before = -model.sequence_logprob(QUERY, target.token_ids)
    assert model.mle_update([target], 0.01) == pytest.approx(before)
    assert -model.sequence_logprob(QUERY, target.token_ids) < before


def test_empty_batch(vocabulary):
    model = LogLinearPolicy(vocabulary)
    assert model.mle_update([], 0.1) == 0.0
    assert not model.weights.any()


def test_clone_is_independent(vocabulary):
    model = LogLinearPolicy(vocabulary)
    copy = model.clone()
    model.mle_update([target_for(vocabulary, program_source("return5"))], 0.1)
    assert model.weights.any()
    assert not copy.weights.any()
    assert copy.vocabulary == model.vocabulary


def test_bad_weight_shape(vocabulary):
    with pytest.raises(ConfigurationError):
        LogLinearPolicy(vocabulary, weights=np.zeros(3))


@pytest.mark.parametrize(
    "kwargs",
    [{"context_buckets": 0}, {"position_buckets": 0}, {"init_scale": -1.0}],
)
def test_bad_config(kwargs):
    with pytest.raises(ConfigurationError):
        PolicyConfig(**kwargs)
