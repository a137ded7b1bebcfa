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
Merit values and the sufficient decrease test
"""

from collections import deque
from math import inf, isfinite

from attrs import field, mutable

from nmprox.model import MeritFlavor, SolverConfig
from nmprox.problem import InfeasibleStartError


__all__ = ()


def acceptable(
    phiNew: float,
    meritPrevious: float,
    gamma: float,
    alpha: float,
    stepSquared: float,
) -> bool:
    """
    Sufficient decrease test: whether a trial point with objective ``phiNew``
    reached by a step of squared length ``stepSquared`` with stepsize
    ``gamma`` improves enough on the merit value ``meritPrevious``.
    Equality accepts.
    """
    if phiNew == inf:
        return False
    return phiNew <= meritPrevious - (1.0 - alpha) / (2.0 * gamma) * stepSquared


@mutable(kw_only=True)
class MeritState:
    """
    Merit value of the accepted iterates.

    The average flavor keeps a running average of the objective values with
    weight ``weight`` for the newest value; the monotone flavor is the average
    flavor with unit weight.
    The max flavor keeps the largest objective value among the last
    ``memory + 1`` accepted iterates.
    """

    flavor: MeritFlavor
    weight: float = 1.0
    memory: int = 0
    value: float
    history: deque[float] = field(repr=False)

    @classmethod
    def initial(cls, phi0: float, config: SolverConfig) -> "MeritState":
        """
        Merit state at a starting point with objective value ``phi0``.

        :raises InfeasibleStartError: if ``phi0`` is not finite.
        """
        if not isfinite(phi0):
            raise InfeasibleStartError(
                f"Objective at the starting point is {phi0!r}"
            )

        return cls(
            flavor=config.flavor,
            weight=config.meritWeight,
            memory=config.memory,
            value=phi0,
            history=deque((phi0,), maxlen=config.memory + 1),
        )

    def update(self, phiNew: float) -> float:
        """
        Update the merit value with the objective value of a newly accepted
        iterate.

        :return: The new merit value.
        """
        if self.flavor is MeritFlavor.max:
            self.history.append(phiNew)
            self.value = max(self.history)
        else:
            self.value = (1.0 - self.weight) * self.value + self.weight * phiNew
        return self.value
