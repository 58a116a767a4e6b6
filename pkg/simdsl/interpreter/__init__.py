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

from .machine import (
    Machine,
    answer_of,
    count_state_changes,
    execute,
    execute_and_get_state,
)
from .trace import (
    ExecutionOutcome,
    ExecutionTrace,
    InstructionKind,
    InstructionRecord,
    OutcomeStatus,
    RuntimeFault,
    State,
)
from .values import RuntimeErrorKind, Value, apply_arith, compare

__all__ = [
    "ExecutionOutcome",
    "ExecutionTrace",
    "InstructionKind",
    "InstructionRecord",
    "Machine",
    "OutcomeStatus",
    "RuntimeErrorKind",
    "RuntimeFault",
    "State",
    "Value",
    "answer_of",
    "apply_arith",
    "compare",
    "count_state_changes",
    "execute",
    "execute_and_get_state",
]
