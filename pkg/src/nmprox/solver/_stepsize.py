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
Stepsize selection
"""

import numpy as np
from attrs import field, mutable

from nmprox.model import Point, SolverConfig, StepsizeKind


__all__ = ()


def spectralStepsize(dx: Point, dg: Point) -> float | None:
    """
    Barzilai-Borwein (long) stepsize ``<dx, dx> / <dx, dg>`` from a step ``dx``
    and the corresponding change ``dg`` of the gradient.

    :return: The estimate, or :obj:`None` if the step is zero or the observed
        curvature ``<dx, dg>`` is not positive.
    """
    curvature = float(np.dot(dx, dg))
    if curvature <= 0.0:
        return None

    length = float(np.dot(dx, dx))
    if length == 0.0:
        return None

    return length / curvature


@mutable(kw_only=True)
class StepsizeStrategy:
    """
    Proposes the first trial stepsize of each outer iteration.

    The plain strategy carries over the last accepted stepsize; the spectral
    strategy estimates it from the last accepted step and falls back to the
    plain rule when there is no estimate.
    Proposals are clamped to the configured stepsize range.
    """

    config: SolverConfig
    gammaPrevious: float | None = None
    lastStep: tuple[Point, Point] | None = field(default=None, repr=False)

    @property
    def kind(self) -> StepsizeKind:
        return self.config.stepsize

    def propose(self) -> float:
        """
        Propose a stepsize for the next outer iteration.
        """
        if self.gammaPrevious is None:
            return self.config.clampStepsize(self.config.gammaInitial)

        gamma = self.gammaPrevious

        if self.kind is StepsizeKind.spectral and self.lastStep is not None:
            estimate = spectralStepsize(*self.lastStep)
            if estimate is not None:
                gamma = estimate

        return self.config.clampStepsize(gamma)

    def observe(
        self,
        gamma: float,
        xPrevious: Point,
        xNew: Point,
        gradientPrevious: Point,
        gradientNew: Point,
    ) -> None:
        """
        Record an accepted step taken with stepsize ``gamma``.
        """
        self.gammaPrevious = gamma
        if self.kind is StepsizeKind.spectral:
            self.lastStep = (xNew - xPrevious, gradientNew - gradientPrevious)
