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

import logging
import os

logger = logging.getLogger(__name__)

MAX_STEPS_ENV = "SIMDSL_MAX_STEPS"

DEFAULT_MAX_STEPS = 1_000_000
DEFAULT_MAX_PROGRAM_TOKENS = 4096
# `if` conditions may be evaluated this many times per allowed step.
CONDITION_LIMIT_FACTOR = 16

# Pseudo-variable written by `return`. The double underscore prefix is not
# reachable from the identifier grammar, so user code can never shadow it.
RETURN_VARIABLE = "__ret__"

PROGRAM_EXTENSION = ".sdsl"

DEFAULT_GAMMA = 0.5
DEFAULT_REAL_TOLERANCE = 1e-6
DEFAULT_BLEU_MAX_ORDER = 4

DEFAULT_BEAM_WIDTH = 32
DEFAULT_N = 8
DEFAULT_S = 4
DEFAULT_BATCH = 32
DEFAULT_EPOCHS = 5
DEFAULT_MAX_LEN = 128

INT_MIN = -(2**63)
INT_MAX = 2**63 - 1


def default_max_steps() -> int:
    """The step cap, honouring the SIMDSL_MAX_STEPS override."""
    raw = os.environ.get(MAX_STEPS_ENV)
    if not raw:
        return DEFAULT_MAX_STEPS
    try:
        value = int(raw)
    except ValueError:
        logger.warning("Ignoring non-integer %s=%r", MAX_STEPS_ENV, raw)
        return DEFAULT_MAX_STEPS
    if value < 1:
        logger.warning("Ignoring non-positive %s=%r", MAX_STEPS_ENV, raw)
        return DEFAULT_MAX_STEPS
    return value
