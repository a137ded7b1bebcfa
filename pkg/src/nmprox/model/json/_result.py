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
JSON serialization/deserialization for solve results
"""

from enum import Enum, unique
from typing import Any

from .._counts import EvaluationCounts
from .._enums import SolveStatus
from .._result import SolveResult
from .._trace import Trace
from ._json import (
    JSONCodecError,
    deserializePoint,
    jsonDeserialize,
    jsonSerialize,
    registerDeserializer,
    registerSerializer,
    serialize,
)


__all__ = ()


@unique
class EvaluationCountsJSONKey(Enum):
    """
    Evaluation counts JSON keys
    """

    prox = "prox_evals"
    gradient = "grad_evals"
    smooth = "f_evals"
    nonsmooth = "g_evals"


def serializeEvaluationCounts(counts: EvaluationCounts) -> dict[str, Any]:
    return serialize(counts, EvaluationCountsJSONKey)


registerSerializer(EvaluationCounts, serializeEvaluationCounts)


def deserializeEvaluationCounts(
    obj: dict[str, Any], cl: type[EvaluationCounts]
) -> EvaluationCounts:
    assert cl is EvaluationCounts, (cl, obj)

    return EvaluationCounts(
        **{
            key.name: int(obj[key.value])
            for key in EvaluationCountsJSONKey
        }
    )


registerDeserializer(EvaluationCounts, deserializeEvaluationCounts)


@unique
class SolveResultJSONKey(Enum):
    """
    Solve result JSON keys
    """

    status = "status"
    xFinal = "x_final"
    xPrevious = "x_previous"
    phiFinal = "phi_final"
    finalResidual = "final_residual"
    gammaFinal = "gamma_final"
    iterations = "iterations"
    backtracks = "backtracks"
    counts = "counts"
    restarted = "restarted"


def serializeSolveResult(result: SolveResult) -> dict[str, Any]:
    # The trace is written separately
    return {
        key.value: jsonSerialize(getattr(result, key.name))
        for key in SolveResultJSONKey
    }


registerSerializer(SolveResult, serializeSolveResult)


def deserializeSolveResult(
    obj: dict[str, Any], cl: type[SolveResult]
) -> SolveResult:
    """
    The result comes back with an empty trace.
    """
    assert cl is SolveResult, (cl, obj)

    def get(key: SolveResultJSONKey) -> Any:
        try:
            return obj[key.value]
        except KeyError as e:
            raise JSONCodecError(
                f"Solve result is missing {key.value!r}"
            ) from e

    return SolveResult(
        status=jsonDeserialize(get(SolveResultJSONKey.status), SolveStatus),
        xFinal=deserializePoint(get(SolveResultJSONKey.xFinal)),
        xPrevious=deserializePoint(get(SolveResultJSONKey.xPrevious)),
        phiFinal=float(get(SolveResultJSONKey.phiFinal)),
        finalResidual=float(get(SolveResultJSONKey.finalResidual)),
        gammaFinal=float(get(SolveResultJSONKey.gammaFinal)),
        iterations=int(get(SolveResultJSONKey.iterations)),
        backtracks=int(get(SolveResultJSONKey.backtracks)),
        counts=jsonDeserialize(
            get(SolveResultJSONKey.counts), EvaluationCounts
        ),
        trace=Trace(),
        restarted=bool(obj.get(SolveResultJSONKey.restarted.value, False)),
    )


registerDeserializer(SolveResult, deserializeSolveResult)
