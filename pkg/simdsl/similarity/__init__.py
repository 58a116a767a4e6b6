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

from .bleu import bleu
from .reward import (
    RewardConfig,
    RewardScorer,
    SimilarityScores,
    combine,
    combined_reward,
)
from .semantic import (
    SemanticScore,
    score_states,
    semantic_reward,
    states_match,
    values_equal,
)

__all__ = [
    "RewardConfig",
    "RewardScorer",
    "SemanticScore",
    "SimilarityScores",
    "bleu",
    "combine",
    "combined_reward",
    "score_states",
    "semantic_reward",
    "states_match",
    "values_equal",
]
