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
Post-hoc verification of solver traces.
"""

from ._checks import (
    diagnose,
    verifyMaxMerit,
    verifyMeritBound,
    verifyRateBounds,
    verifyResidualTrend,
    verifySufficientDecrease,
    verifySummability,
)
from ._report import (
    CheckResult,
    CheckResultJSONKey,
    CheckStatus,
    DiagnosticsReport,
)


__all__ = (
    "CheckResult",
    "CheckResultJSONKey",
    "CheckStatus",
    "DiagnosticsReport",
    "diagnose",
    "verifyMaxMerit",
    "verifyMeritBound",
    "verifyRateBounds",
    "verifyResidualTrend",
    "verifySufficientDecrease",
    "verifySummability",
)
