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
Traces for diagnostics tests.
"""

from math import sqrt

import numpy as np
from attrs import evolve

from nmprox.model import IterationRecord, SolverConfig, Trace
from nmprox.problem import LeastSquares, Problem
from nmprox.prox import L1Norm
from nmprox.solver import solve


__all__ = ()


def lassoTrace(config: SolverConfig, seed: int = 0) -> Trace:
    """
    Trace of a solve of a random lasso problem.
    """
    rng = np.random.default_rng(seed)
    matrix = rng.standard_normal((30, 15)) / sqrt(30)
    target = rng.standard_normal(30)
    lam = 0.1 * float(np.max(np.abs(matrix.T @ target)))
    problem = Problem(
        smooth=LeastSquares(matrix=matrix, target=target),
        nonsmooth=L1Norm(size=15, lam=lam),
    )

    return solve(problem, np.zeros(15), config).trace


def replaced(trace: Trace, k: int, **changes: float) -> Trace:
    """
    Copy of ``trace`` with record ``k`` changed.
    """
    records = list(trace)
    records[k] = evolve(records[k], **changes)
    return Trace(records=records)


def record(
    k: int,
    phi: float,
    merit: float,
    gamma: float = 1.0,
    stepNorm: float = 0.0,
    residual: float | None = None,
) -> IterationRecord:
    if residual is None:
        residual = stepNorm / gamma
    return IterationRecord(
        k=k,
        gamma=gamma,
        phi=phi,
        merit=merit,
        residual=residual,
        backtracks=0,
        stepNorm=stepNorm,
        proxEvaluations=k,
        gradientEvaluations=k + 1,
        smoothEvaluations=k + 1,
        nonsmoothEvaluations=k + 1,
    )
