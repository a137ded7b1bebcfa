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
JSON serialization/deserialization for solver enumerations
"""

from enum import Enum, unique
from typing import cast

from .._enums import MeritFlavor, SolveStatus, StepsizeKind
from ._json import registerDeserializer, registerSerializer


__all__ = ()


@unique
class MeritFlavorJSONValue(Enum):
    """
    Merit flavor JSON values
    """

    monotone = "monotone"
    average = "average"
    max = "max"


@unique
class StepsizeKindJSONValue(Enum):
    """
    Stepsize kind JSON values
    """

    plain = "plain"
    spectral = "spectral"


@unique
class SolveStatusJSONValue(Enum):
    """
    Solve status JSON values
    """

    converged = "converged"
    maxIterations = "max_iters"
    maxBacktracks = "max_backtracks"
    infeasibleStart = "infeasible_start"


def _register(modelEnum: type[Enum], jsonEnum: type[Enum]) -> None:
    def serializeValue(value: Enum) -> str:
        return cast(str, getattr(jsonEnum, value.name).value)

    def deserializeValue(obj: str, cl: type[Enum]) -> Enum:
        assert cl is modelEnum, (cl, obj)

        return cast(Enum, getattr(modelEnum, jsonEnum(obj).name))

    registerSerializer(modelEnum, serializeValue)
    registerDeserializer(modelEnum, deserializeValue)


_register(MeritFlavor, MeritFlavorJSONValue)
_register(StepsizeKind, StepsizeKindJSONValue)
_register(SolveStatus, SolveStatusJSONValue)
