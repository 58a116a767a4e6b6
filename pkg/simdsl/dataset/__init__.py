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

from .complexity import (
    Complexity,
    ComplexityLabel,
    classify_complexity,
    classify_program,
)
from .distractors import generate_distractors, make_options
from .example import DatasetVersion, QAExample, Split, validation_error
from .loader import (
    IMPORTERS,
    LoadReport,
    QuarantineEntry,
    load_dataset,
    register_importer,
    write_dataset,
)
from .synthetic import generate_synthetic_corpus

__all__ = [
    "Complexity",
    "ComplexityLabel",
    "DatasetVersion",
    "IMPORTERS",
    "LoadReport",
    "QAExample",
    "QuarantineEntry",
    "Split",
    "classify_complexity",
    "classify_program",
    "generate_distractors",
    "generate_synthetic_corpus",
    "load_dataset",
    "make_options",
    "register_importer",
    "validation_error",
    "write_dataset",
]
