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
Benchmark suite results
"""

from attrs import frozen

from ._enums import SolveStatus


__all__ = ()


# Status of a run that raised instead of returning a result.
ERROR_STATUS = "error"


@frozen(kw_only=True)
class SuiteRow:
    """
    Outcome of one solver variant on one benchmark instance.

    ``status`` is a :class:`SolveStatus` value, or ``"error"`` if the run
    failed.
    """

    instanceSeed: int
    variant: str
    status: str
    iterations: int
    proxEvaluations: int
    gradientEvaluations: int
    phiFinal: float
    residualFinal: float

    @property
    def converged(self) -> bool:
        return self.status == SolveStatus.converged.value


@frozen(kw_only=True)
class ProfileCurve:
    """
    Performance profile of one solver variant: the fraction of instances
    solved within each budget.
    """

    variant: str
    budgets: tuple[float, ...]
    fractions: tuple[float, ...]
