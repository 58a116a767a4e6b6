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

from .config import HarnessConfig
from .qa import (
    Answer,
    CandidateDiagnostic,
    EvaluationMode,
    EvaluationReport,
    ExampleResult,
    answer_question,
    evaluate_accuracy,
)
from .sweep import SweepRow, gamma_sweep
from .train import (
    ScoredCandidate,
    TrainingRecord,
    TrainResult,
    build_vocabulary,
    initial_policy,
    reinforce_train,
    score_candidates,
    select_top,
)

__all__ = [
    "Answer",
    "CandidateDiagnostic",
    "EvaluationMode",
    "EvaluationReport",
    "ExampleResult",
    "HarnessConfig",
    "ScoredCandidate",
    "SweepRow",
    "TrainResult",
    "TrainingRecord",
    "answer_question",
    "build_vocabulary",
    "evaluate_accuracy",
    "gamma_sweep",
    "initial_policy",
    "reinforce_train",
    "score_candidates",
    "select_top",
]
