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
Test strategies for model data.
"""

from collections.abc import Callable
from typing import Any

import numpy as np
from hypothesis.strategies import (
    SearchStrategy,
    booleans,
    composite,
    floats,
    integers,
    lists,
    sampled_from,
)

from ._config import SolverConfig
from ._counts import EvaluationCounts
from ._enums import MeritFlavor, SolveStatus, StepsizeKind
from ._point import Point
from ._suite import ERROR_STATUS, SuiteRow
from ._trace import IterationRecord, Trace


__all__ = (
    "evaluationCounts",
    "iterationRecords",
    "meritFlavors",
    "points",
    "regularizationWeights",
    "seeds",
    "solveStatuses",
    "solverConfigs",
    "stepsizeKinds",
    "stepsizes",
    "suiteRows",
    "traces",
)


##
# Scalars
##


def stepsizes() -> SearchStrategy:  # float
    """
    Strategy that generates positive stepsizes.
    """
    return floats(min_value=1e-3, max_value=1e3)


def regularizationWeights() -> SearchStrategy:  # float
    """
    Strategy that generates nonnegative regularization weights.
    """
    return floats(min_value=0.0, max_value=10.0)


def seeds() -> SearchStrategy:  # int
    """
    Strategy that generates random number generator seeds.
    """
    return integers(min_value=0, max_value=2**32 - 1)


##
# Points
##


@composite
def points(
    draw: Callable[..., Any],
    minSize: int = 1,
    maxSize: int = 8,
    bound: float = 10.0,
) -> Point:
    """
    Strategy that generates finite points.
    """
    values = draw(
        lists(
            floats(min_value=-bound, max_value=bound),
            min_size=minSize,
            max_size=maxSize,
        )
    )
    return np.asarray(values, dtype=np.float64)


##
# Enums
##


def meritFlavors() -> SearchStrategy:  # MeritFlavor
    """
    Strategy that generates :class:`MeritFlavor` values.
    """
    return sampled_from(MeritFlavor)


def stepsizeKinds() -> SearchStrategy:  # StepsizeKind
    """
    Strategy that generates :class:`StepsizeKind` values.
    """
    return sampled_from(StepsizeKind)


def solveStatuses() -> SearchStrategy:  # SolveStatus
    """
    Strategy that generates :class:`SolveStatus` values.
    """
    return sampled_from(SolveStatus)


##
# Configuration
##


@composite
def solverConfigs(draw: Callable[..., Any]) -> SolverConfig:
    """
    Strategy that generates valid :class:`SolverConfig` values.
    """
    gammaMin = draw(floats(min_value=1e-12, max_value=1e-3))
    gammaMax = draw(floats(min_value=1.0, max_value=1e12))

    return SolverConfig(
        gammaMin=gammaMin,
        gammaMax=gammaMax,
        gammaInitial=draw(floats(min_value=gammaMin, max_value=gammaMax)),
        alpha=draw(floats(min_value=0.01, max_value=0.999)),
        beta=draw(floats(min_value=0.1, max_value=0.9)),
        p=draw(floats(min_value=0.01, max_value=1.0)),
        flavor=draw(meritFlavors()),
        memory=draw(integers(min_value=0, max_value=10)),
        stepsize=draw(stepsizeKinds()),
        epsilon=draw(floats(min_value=1e-10, max_value=1e-2)),
        maxIterations=draw(integers(min_value=1, max_value=100_000)),
        maxBacktracks=draw(integers(min_value=0, max_value=200)),
        restartInfeasible=draw(booleans()),
        terminationInLoop=draw(booleans()),
    )


##
# Traces
##


@composite
def evaluationCounts(draw: Callable[..., Any]) -> EvaluationCounts:
    """
    Strategy that generates :class:`EvaluationCounts` values.
    """
    count = integers(min_value=0, max_value=10_000)
    return EvaluationCounts(
        smooth=draw(count),
        gradient=draw(count),
        nonsmooth=draw(count),
        prox=draw(count),
    )


@composite
def iterationRecords(
    draw: Callable[..., Any], k: int | None = None
) -> IterationRecord:
    """
    Strategy that generates :class:`IterationRecord` values.
    """
    if k is None:
        k = draw(integers(min_value=0, max_value=10_000))

    value = floats(
        min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False
    )
    magnitude = floats(min_value=0.0, max_value=1e6)
    counts = draw(evaluationCounts())

    return IterationRecord(
        k=k,
        gamma=draw(stepsizes()),
        phi=draw(value),
        merit=draw(value),
        residual=draw(magnitude),
        backtracks=draw(integers(min_value=0, max_value=200)),
        stepNorm=draw(magnitude),
        proxEvaluations=counts.prox,
        gradientEvaluations=counts.gradient,
        smoothEvaluations=counts.smooth,
        nonsmoothEvaluations=counts.nonsmooth,
    )


@composite
def traces(draw: Callable[..., Any], maxSize: int = 20) -> Trace:
    """
    Strategy that generates :class:`Trace` values with consecutive iteration
    numbers starting at zero.
    """
    size = draw(integers(min_value=0, max_value=maxSize))
    return Trace(records=[draw(iterationRecords(k=k)) for k in range(size)])


##
# Benchmark results
##


@composite
def suiteRows(
    draw: Callable[..., Any], variants: tuple[str, ...] = ("a", "b")
) -> SuiteRow:
    """
    Strategy that generates :class:`SuiteRow` values for the given variants.
    """
    status = draw(sampled_from([s.value for s in SolveStatus] + [ERROR_STATUS]))
    prox = draw(integers(min_value=0, max_value=1000))

    return SuiteRow(
        instanceSeed=draw(integers(min_value=0, max_value=99)),
        variant=draw(sampled_from(variants)),
        status=status,
        iterations=prox,
        proxEvaluations=prox,
        gradientEvaluations=prox + 1,
        phiFinal=draw(floats(min_value=0.0, max_value=1e3)),
        residualFinal=draw(floats(min_value=0.0, max_value=1.0)),
    )
