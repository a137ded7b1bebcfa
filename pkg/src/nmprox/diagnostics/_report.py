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
Diagnostics reports
"""

from collections.abc import Iterable, Sequence
from typing import Any

from attrs import field, frozen

from nmprox.ext.enum import Enum, Names, unique
from nmprox.model.json import (
    jsonObjectFromModelObject,
    registerSerializer,
    serialize,
)


__all__ = ()


@unique
class CheckStatus(Names):
    """
    Outcome of a trace check.

      * Passed: every inequality holds within tolerance.
      * Failed: some inequality is violated.
      * Warning: a soft check did not hold; not a failure.
      * Not applicable: the check does not apply to this trace or merit
        flavor.
    """

    passed = "pass"
    failed = "fail"
    warning = "warn"
    notApplicable = "not_applicable"

    def __str__(self) -> str:
        return str(self.value)


@frozen(kw_only=True)
class CheckResult:
    """
    Result of one trace check.

    ``margin`` is the smallest slack (right hand side minus left hand side)
    over all checked inequalities, and ``index`` the iteration where it
    occurs; both are :obj:`None` when nothing was checked.
    """

    check: str
    status: CheckStatus
    margin: float | None = None
    index: int | None = None

    @property
    def failed(self) -> bool:
        return self.status is CheckStatus.failed


def freezeResults(results: Iterable[CheckResult]) -> tuple[CheckResult, ...]:
    return tuple(results)


@frozen(kw_only=True)
class DiagnosticsReport:
    """
    Results of all trace checks, one per check.
    """

    results: Sequence[CheckResult] = field(converter=freezeResults)

    @property
    def passed(self) -> bool:
        """
        Whether no hard check failed.
        """
        return not any(result.failed for result in self.results)

    @property
    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(result for result in self.results if result.failed)

    def __getitem__(self, check: str) -> CheckResult:
        for result in self.results:
            if result.check == check:
                return result
        raise KeyError(check)

    def asJSON(self) -> Any:
        return jsonObjectFromModelObject(list(self.results))


@unique
class CheckResultJSONKey(Enum):
    """
    Check result JSON keys
    """

    check = "check"
    status = "status"
    margin = "margin"
    index = "index"


def serializeCheckStatus(status: CheckStatus) -> str:
    return str(status.value)


registerSerializer(CheckStatus, serializeCheckStatus)


def serializeCheckResult(result: CheckResult) -> dict[str, Any]:
    return serialize(result, CheckResultJSONKey)


registerSerializer(CheckResult, serializeCheckResult)
