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
JSON serialization/deserialization for solver configuration
"""

from enum import Enum, unique
from typing import Any, cast

from .._config import SolverConfig
from .._enums import MeritFlavor, StepsizeKind
from ._json import (
    deserialize,
    registerDeserializer,
    registerSerializer,
    serialize,
)


__all__ = ()


@unique
class SolverConfigJSONKey(Enum):
    """
    Solver configuration JSON keys
    """

    gammaMin = "gamma_min"
    gammaMax = "gamma_max"
    gammaInitial = "gamma_initial"
    alpha = "alpha"
    beta = "beta"
    p = "p"
    flavor = "flavor"
    memory = "memory"
    stepsize = "stepsize"
    epsilon = "epsilon"
    maxIterations = "max_iters"
    maxBacktracks = "max_backtracks"
    restartInfeasible = "restart_infeasible"
    terminationInLoop = "termination_in_loop"


class SolverConfigJSONType(Enum):
    """
    Solver configuration attribute types
    """

    gammaMin = float
    gammaMax = float
    gammaInitial = float
    alpha = float
    beta = float
    p = float
    flavor = MeritFlavor
    memory = int
    stepsize = StepsizeKind
    epsilon = float
    maxIterations = int
    maxBacktracks = int
    restartInfeasible = bool
    terminationInLoop = bool


def serializeSolverConfig(config: SolverConfig) -> dict[str, Any]:
    return serialize(config, SolverConfigJSONKey)


registerSerializer(SolverConfig, serializeSolverConfig)


def deserializeSolverConfig(
    obj: dict[str, Any], cl: type[SolverConfig]
) -> SolverConfig:
    """
    Keys missing from ``obj`` take their default values.
    """
    assert cl is SolverConfig, (cl, obj)

    return cast(
        SolverConfig,
        deserialize(
            obj,
            SolverConfig,
            SolverConfigJSONType,
            SolverConfigJSONKey,
            partial=True,
        ),
    )


registerDeserializer(SolverConfig, deserializeSolverConfig)
