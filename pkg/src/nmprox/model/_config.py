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
Solver configuration
"""

from math import isfinite
from typing import Any

from attrs import evolve, frozen

from nmprox.config import ConfigurationError

from ._enums import MeritFlavor, StepsizeKind


__all__ = ()


@frozen(kw_only=True)
class SolverConfig:
    """
    Parameters of the adaptive nonmonotone proximal gradient method.

    Defaults are those used for the dictionary learning experiments: a
    backtracking factor of one half, a sufficient decrease parameter close to
    one, and a stepsize range spanning twenty-four orders of magnitude.

    ``p`` is the averaging weight of the average flavor; the monotone flavor
    always uses a weight of one, and the max flavor ignores it in favor of the
    window size ``memory``.
    """

    gammaMin: float = 1e-12
    gammaMax: float = 1e12
    gammaInitial: float = 1.0
    alpha: float = 0.999
    beta: float = 0.5
    p: float = 0.2
    flavor: MeritFlavor = MeritFlavor.average
    memory: int = 5
    stepsize: StepsizeKind = StepsizeKind.spectral
    epsilon: float = 1e-6
    maxIterations: int = 100_000
    maxBacktracks: int = 200
    restartInfeasible: bool = False
    terminationInLoop: bool = True

    def __attrs_post_init__(self) -> None:
        def check(condition: bool, message: str) -> None:
            if not condition:
                raise ConfigurationError(message)

        check(
            isfinite(self.gammaMin)
            and isfinite(self.gammaMax)
            and 0 < self.gammaMin <= self.gammaMax,
            "Stepsize bounds must satisfy 0 < gamma_min <= gamma_max < inf, "
            f"not [{self.gammaMin}, {self.gammaMax}]",
        )
        check(
            isfinite(self.gammaInitial) and self.gammaInitial > 0,
            f"Initial stepsize must be positive, not {self.gammaInitial}",
        )
        check(0 < self.alpha < 1, f"alpha must lie in (0, 1), not {self.alpha}")
        check(0 < self.beta < 1, f"beta must lie in (0, 1), not {self.beta}")
        check(0 < self.p <= 1, f"p must lie in (0, 1], not {self.p}")
        check(
            self.memory >= 0, f"memory must be nonnegative, not {self.memory}"
        )
        check(
            isfinite(self.epsilon) and self.epsilon > 0,
            f"Termination tolerance must be positive, not {self.epsilon}",
        )
        check(
            self.maxIterations >= 1,
            f"max_iters must be at least 1, not {self.maxIterations}",
        )
        check(
            self.maxBacktracks >= 0,
            f"max_backtracks must be nonnegative, not {self.maxBacktracks}",
        )

    @property
    def meritWeight(self) -> float:
        """
        The averaging weight actually used by the merit update.
        """
        if self.flavor is MeritFlavor.monotone:
            return 1.0
        return self.p

    @property
    def variantName(self) -> str:
        """
        Name of this variant, as used in benchmark tables and profile files.
        """
        return f"{self.stepsize.value}_{self.flavor.value}"

    def clampStepsize(self, gamma: float) -> float:
        """
        Project a stepsize onto ``[gammaMin, gammaMax]``.
        """
        return min(max(gamma, self.gammaMin), self.gammaMax)

    def replace(self, **kwargs: Any) -> "SolverConfig":
        """
        Return a new configuration with the same values, except those specified
        by keyword arguments.
        """
        return evolve(self, **kwargs)
