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
JSON serialization/deserialization for run specifications
"""

from enum import Enum, unique
from pathlib import Path
from typing import Any, cast

from nmprox.ext.json import objectFromJSONText
from nmprox.model import SolverConfig
from nmprox.model.json import (
    deserialize,
    modelObjectFromJSONObject,
    registerDeserializer,
    registerSerializer,
    serialize,
)

from ._spec import ProblemKind, ProblemSpec, RunSpec


__all__ = ()


def serializePath(path: Path) -> str:
    return str(path)


def deserializePath(obj: str, cl: type[Path]) -> Path:
    if not isinstance(obj, str):
        raise TypeError(f"Expected a path, not {obj!r}")
    return Path(obj)


registerSerializer(Path, serializePath)
registerDeserializer(Path, deserializePath)


@unique
class ProblemKindJSONValue(Enum):
    """
    Built-in problem JSON values
    """

    lasso1d = "lasso1d"
    lasso = "lasso"
    l0reg = "l0reg"
    dictlearn = "dictlearn"


def serializeProblemKind(kind: ProblemKind) -> str:
    return cast(str, getattr(ProblemKindJSONValue, kind.name).value)


def deserializeProblemKind(obj: str, cl: type[ProblemKind]) -> ProblemKind:
    assert cl is ProblemKind, (cl, obj)

    name = ProblemKindJSONValue(obj).name
    return cast(ProblemKind, getattr(ProblemKind, name))


registerSerializer(ProblemKind, serializeProblemKind)
registerDeserializer(ProblemKind, deserializeProblemKind)


@unique
class ProblemSpecJSONKey(Enum):
    """
    Problem specification JSON keys
    """

    kind = "name"
    size = "size"
    seed = "seed"
    lam = "lambda"
    rows = "n"
    atoms = "l"
    signals = "m"
    nonzeros = "N"


class ProblemSpecJSONType(Enum):
    """
    Problem specification attribute types
    """

    kind = ProblemKind
    size = int
    seed = int
    lam = float | None
    rows = int
    atoms = int
    signals = int
    nonzeros = int


def serializeProblemSpec(spec: ProblemSpec) -> dict[str, Any]:
    return serialize(spec, ProblemSpecJSONKey)


registerSerializer(ProblemSpec, serializeProblemSpec)


def deserializeProblemSpec(
    obj: dict[str, Any], cl: type[ProblemSpec]
) -> ProblemSpec:
    """
    Keys missing from ``obj`` take their default values.
    """
    assert cl is ProblemSpec, (cl, obj)

    return cast(
        ProblemSpec,
        deserialize(
            obj,
            ProblemSpec,
            ProblemSpecJSONType,
            ProblemSpecJSONKey,
            partial=True,
        ),
    )


registerDeserializer(ProblemSpec, deserializeProblemSpec)


@unique
class RunSpecJSONKey(Enum):
    """
    Run specification JSON keys
    """

    problem = "problem"
    solver = "solver"
    traceFile = "out_trace"
    resultFile = "out_result"


class RunSpecJSONType(Enum):
    """
    Run specification attribute types
    """

    problem = ProblemSpec
    solver = SolverConfig
    traceFile = Path | None
    resultFile = Path | None


def serializeRunSpec(spec: RunSpec) -> dict[str, Any]:
    return serialize(spec, RunSpecJSONKey)


registerSerializer(RunSpec, serializeRunSpec)


def deserializeRunSpec(obj: dict[str, Any], cl: type[RunSpec]) -> RunSpec:
    """
    Keys missing from ``obj`` take their default values.
    """
    assert cl is RunSpec, (cl, obj)

    return cast(
        RunSpec,
        deserialize(
            obj, RunSpec, RunSpecJSONType, RunSpecJSONKey, partial=True
        ),
    )


registerDeserializer(RunSpec, deserializeRunSpec)


def runSpecFromJSONText(text: str) -> RunSpec:
    """
    Read a run specification from JSON text.

    :raises ConfigurationError: if the specification is invalid.
    :raises ValueError: if the text is not JSON.
    """
    return cast(
        RunSpec, modelObjectFromJSONObject(objectFromJSONText(text), RunSpec)
    )


def runSpecFromFile(path: Path) -> RunSpec:
    """
    Read a run specification from a JSON file.
    Relative output paths are relative to the directory of the file.

    :raises OSError: if the file cannot be read.
    """
    spec = runSpecFromJSONText(path.read_text())
    root = path.parent

    def resolve(output: Path | None) -> Path | None:
        if output is None or output.is_absolute() or str(output) == "-":
            return output
        return root / output

    return spec.replace(
        traceFile=resolve(spec.traceFile), resultFile=resolve(spec.resultFile)
    )
