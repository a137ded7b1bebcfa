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
Solver data model JSON serialization/deserialization
"""

from collections.abc import Callable, Iterable, Mapping
from enum import Enum
from typing import Any, Union, cast

import numpy as np
from cattrs import Converter
from twisted.logger import Logger

from nmprox.config import ConfigurationError

from .._point import Point, asPoint


__all__ = ()


log = Logger()


JSON = Union[Mapping[str, Any], Iterable[Any], int, str, float, bool, None]


class JSONCodecError(Exception):
    """
    Error while serializing or deserializing JSON data.
    """


converter = Converter()

jsonSerialize: Callable[[Any], JSON] = converter.unstructure
jsonDeserialize = converter.structure

registerSerializer = converter.register_unstructure_hook
registerDeserializer = converter.register_structure_hook


# Tuples should serialize like lists


def serializeIterable(iterable: Iterable[Any]) -> list[JSON]:
    return [jsonSerialize(item) for item in iterable]


registerSerializer(tuple, serializeIterable)


# Points


def serializePoint(point: Point) -> list[float]:
    return cast(list[float], np.asarray(point, dtype=np.float64).tolist())


registerSerializer(np.ndarray, serializePoint)


def deserializePoint(obj: list[float]) -> Point:
    if not isinstance(obj, list):
        raise JSONCodecError(f"Point must be a list of numbers, not {obj!r}")
    try:
        return asPoint(obj)
    except (TypeError, ValueError) as e:
        raise JSONCodecError(f"Invalid point: {obj!r}") from e


# Public API


def jsonObjectFromModelObject(model: Any) -> JSON:
    return jsonSerialize(model)


def modelObjectFromJSONObject(json: JSON, modelClass: type) -> Any:
    try:
        return jsonDeserialize(json, modelClass)
    except (KeyError, TypeError, ValueError) as e:
        raise JSONCodecError(
            f"Invalid JSON for {modelClass.__name__}: {json}"
        ) from e


# Utilities


def serialize(obj: Any, keyEnum: type[Enum]) -> dict[str, Any]:
    """
    Map attribute names of ``obj`` to JSON keys.
    """
    return {
        key.value: jsonSerialize(getattr(obj, key.name))
        for key in cast(Iterable[Enum], keyEnum)
    }


def deserialize(
    obj: Mapping[str, Any],
    cls: type[Any],
    typeEnum: type[Enum],
    keyEnum: type[Enum],
    partial: bool = False,
) -> Any:
    """
    Build an instance of ``cls`` from JSON keys.

    If ``partial`` is true, missing keys are left to the class defaults;
    otherwise every key is required.
    Unknown keys are rejected.

    :raises ConfigurationError: if a key is unknown or missing, or a value
        does not fit its attribute.
    """
    if not isinstance(obj, Mapping):
        raise ConfigurationError(
            f"Expected a JSON object for {cls.__name__}, not {obj!r}"
        )

    known = {key.value for key in cast(Iterable[Enum], keyEnum)}
    unknown = sorted(set(obj) - known)
    if unknown:
        raise ConfigurationError(
            f"Unknown keys for {cls.__name__}: {', '.join(unknown)}"
        )

    def deserializeKey(key: Enum) -> Any:
        try:
            cls = getattr(typeEnum, key.name).value
        except AttributeError as e:
            raise AttributeError(
                "No attribute {attribute!r} in type enum {enum!r}".format(
                    attribute=key.name, enum=typeEnum
                )
            ) from e
        try:
            return jsonDeserialize(obj[key.value], cls)
        except ConfigurationError:
            raise
        except Exception as e:
            log.error(
                "Unable to deserialize {key} as {cls} from {json}",
                key=key,
                cls=cls,
                json=obj,
            )
            raise ConfigurationError(
                f"Invalid value for {key.value!r}: {obj[key.value]!r}"
            ) from e

    values = {}
    for key in cast(Iterable[Enum], keyEnum):
        if key.value in obj:
            values[key.name] = deserializeKey(key)
        elif not partial:
            raise ConfigurationError(
                f"Missing key for {cls.__name__}: {key.value}"
            )

    return cls(**values)
