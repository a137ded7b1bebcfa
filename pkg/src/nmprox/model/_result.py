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
Solve results
"""

from attrs import field, frozen

from ._counts import EvaluationCounts
from ._enums import SolveStatus
from ._point import Point
from ._trace import Trace


__all__ = ()


@frozen(kw_only=True, eq=False)
class SolveResult:
    """
    Result of a solve.

    ``xFinal`` is the returned point: on convergence, the trial point that
    passed the termination test; otherwise the last accepted iterate (or the
    starting point).
    ``xPrevious`` and ``gammaFinal`` are the point and stepsize the final
    termination residual was computed from, so that it can be recomputed.
    ``iterations`` counts outer iterations, including a final iteration that
    terminated or ran out of backtracks; ``backtracks`` counts stepsize
    reductions over all of them.
    """

    status: SolveStatus
    xFinal: Point = field(repr=False)
    xPrevious: Point = field(repr=False)
    phiFinal: float
    finalResidual: float
    gammaFinal: float
    iterations: int
    backtracks: int
    counts: EvaluationCounts
    trace: Trace = field(repr=False)
    restarted: bool = False

    @property
    def converged(self) -> bool:
        return self.status is SolveStatus.converged
