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
JSON serialization/deserialization for benchmark instances
"""

from enum import Enum, unique
from typing import Any, cast

from nmprox.model.json import (
    deserialize,
    registerDeserializer,
    registerSerializer,
    serialize,
)

from ._instance import InstanceSpec


__all__ = ()


@unique
class InstanceSpecJSONKey(Enum):
    """
    Instance specification JSON keys
    """

    rows = "n"
    atoms = "l"
    signals = "m"
    nonzeros = "N"
    lam = "lambda"
    seed = "seed"


class InstanceSpecJSONType(Enum):
    """
    Instance specification attribute types
    """

    rows = int
    atoms = int
    signals = int
    nonzeros = int
    lam = float
    seed = int


def serializeInstanceSpec(spec: InstanceSpec) -> dict[str, Any]:
    return serialize(spec, InstanceSpecJSONKey)


registerSerializer(InstanceSpec, serializeInstanceSpec)


def deserializeInstanceSpec(
    obj: dict[str, Any], cl: type[InstanceSpec]
) -> InstanceSpec:
    """
    Keys missing from ``obj`` take their default values.
    """
    assert cl is InstanceSpec, (cl, obj)

    return cast(
        InstanceSpec,
        deserialize(
            obj,
            InstanceSpec,
            InstanceSpecJSONType,
            InstanceSpecJSONKey,
            partial=True,
        ),
    )


registerDeserializer(InstanceSpec, deserializeInstanceSpec)
