##
# See the file COPYRIGHT for copyright information.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
##

"""
Solver data model
"""

from ._config import SolverConfig
from ._counts import EvaluationCounts
from ._enums import MeritFlavor, SolveStatus, StepsizeKind
from ._point import Point, asMatrix, asPoint, squaredNorm
from ._result import SolveResult
from ._suite import ERROR_STATUS, ProfileCurve, SuiteRow
from ._trace import IterationRecord, Trace


__all__ = (
    "ERROR_STATUS",
    "EvaluationCounts",
    "IterationRecord",
    "MeritFlavor",
    "Point",
    "ProfileCurve",
    "SolveResult",
    "SolveStatus",
    "SolverConfig",
    "StepsizeKind",
    "SuiteRow",
    "Trace",
    "asMatrix",
    "asPoint",
    "squaredNorm",
)
