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
Solver enumerations
"""

from nmprox.ext.enum import Names, auto, unique


__all__ = ()


@unique
class MeritFlavor(Names):
    """
    Merit function flavors for the line search.

      * Monotone: the merit is the objective at the latest iterate.
      * Average: the merit is a running convex combination of objective values.
      * Max: the merit is the largest objective value over a sliding window of
        recent iterates.

    The monotone flavor is the average flavor with unit weight.
    """

    monotone = auto()
    average = auto()
    max = auto()


@unique
class StepsizeKind(Names):
    """
    Trial stepsize selection strategies.

      * Plain: inherit the last accepted stepsize.
      * Spectral: the Barzilai-Borwein estimate from the last accepted step.
    """

    plain = auto()
    spectral = auto()


@unique
class SolveStatus(Names):
    """
    Outcome of a solve.
    """

    converged = "converged"
    maxIterations = "max_iters"
    maxBacktracks = "max_backtracks"
    infeasibleStart = "infeasible_start"

    def __str__(self) -> str:
        return str(self.value)
