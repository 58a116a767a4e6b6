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

__all__ = [
    "CheckpointError",
    "ConfigurationError",
    "DatasetError",
    "ExecutionFault",
    "LexError",
    "ParseError",
    "SimDslException",
    "TrainingDivergedError",
    "answer_question",
    "beam_search",
    "bleu",
    "combined_reward",
    "evaluate_accuracy",
    "execute",
    "execute_and_get_state",
    "gamma_sweep",
    "load_dataset",
    "parse",
    "pretty_print",
    "reinforce_train",
    "semantic_reward",
    "tokenize",
]

from .dataset import load_dataset
from .dsl import parse, pretty_print, tokenize
from .exceptions import (
    CheckpointError,
    ConfigurationError,
    DatasetError,
    ExecutionFault,
    LexError,
    ParseError,
    SimDslException,
    TrainingDivergedError,
)
from .harness import answer_question, evaluate_accuracy, gamma_sweep, reinforce_train
from .interpreter import execute, execute_and_get_state
from .policy import beam_search
from .similarity import bleu, combined_reward, semantic_reward
