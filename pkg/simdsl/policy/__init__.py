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

from .abstract import PolicyModel, PolicyTarget
from .beam import BeamCandidate, beam_search, search
from .checkpoint import load_checkpoint, save_checkpoint
from .loglinear import LogLinearPolicy, PolicyConfig, loglinear_gradient_check
from .training import PretrainResult, mean_nll, mle_pretrain, to_target
from .vocabulary import BOS, EOS, UNK, CoverageReport, Query, Vocabulary

__all__ = [
    "BOS",
    "BeamCandidate",
    "CoverageReport",
    "EOS",
    "LogLinearPolicy",
    "PolicyConfig",
    "PolicyModel",
    "PolicyTarget",
    "PretrainResult",
    "Query",
    "UNK",
    "Vocabulary",
    "beam_search",
    "load_checkpoint",
    "loglinear_gradient_check",
    "mean_nll",
    "mle_pretrain",
    "save_checkpoint",
    "search",
    "to_target",
]
