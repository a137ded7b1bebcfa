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
Adaptive nonmonotone proximal gradient method
"""

from math import inf, sqrt
from typing import ClassVar, TypeAlias

import numpy as np
from attrs import field, frozen, mutable
from twisted.logger import Logger

from nmprox.model import (
    EvaluationCounts,
    IterationRecord,
    Point,
    SolveResult,
    SolverConfig,
    SolveStatus,
    Trace,
    asPoint,
    squaredNorm,
)
from nmprox.problem import Problem

from ._merit import MeritState, acceptable
from ._stepsize import StepsizeStrategy


__all__ = ()


def terminationResidual(
    xPrevious: Point,
    xNew: Point,
    gamma: float,
    gradientPrevious: Point,
    gradientNew: Point,
) -> float:
    """
    Termination residual ``||(xNew - xPrevious) / gamma - gradientNew +
    gradientPrevious||`` of a proximal gradient step from ``xPrevious`` to
    ``xNew`` with stepsize ``gamma``.
    It bounds the distance from zero to the limiting subdifferential of the
    objective at ``xNew``.
    """
    difference = (xNew - xPrevious) / gamma - gradientNew + gradientPrevious
    return float(np.linalg.norm(difference))


@frozen(kw_only=True)
class Accepted:
    """
    A trial point passed the sufficient decrease test.
    """

    x: Point = field(repr=False)
    gradient: Point = field(repr=False)
    phi: float
    gamma: float
    backtracks: int
    stepSquared: float
    residual: float


@frozen(kw_only=True)
class Terminated:
    """
    A trial point passed the termination test.
    """

    x: Point = field(repr=False)
    gamma: float
    backtracks: int
    residual: float


@frozen(kw_only=True)
class BacktrackLimit:
    """
    No trial point passed either test within the backtracking limit, or
    a further backtrack would take the stepsize below ``gammaMin``.
    """

    gamma: float
    backtracks: int
    residual: float


StepOutcome: TypeAlias = Accepted | Terminated | BacktrackLimit


@mutable(kw_only=True)
class Solver:
    """
    Proximal gradient method with adaptive stepsizes and a nonmonotone line
    search.

    Each outer iteration proposes a stepsize, then takes proximal gradient
    steps from the last accepted iterate, shrinking the stepsize until the
    trial point either passes the termination test or decreases sufficiently
    with respect to the merit value.
    """

    _log: ClassVar[Logger] = Logger()

    problem: Problem
    config: SolverConfig = field(factory=SolverConfig)

    def step(
        self,
        xPrevious: Point,
        gradientPrevious: Point,
        gamma: float,
        merit: float,
    ) -> StepOutcome:
        """
        Perform one outer iteration from the accepted iterate ``xPrevious``
        with gradient ``gradientPrevious``, starting with stepsize ``gamma``
        and comparing against the merit value ``merit``.
        """
        config = self.config
        problem = self.problem
        backtracks = 0

        while True:
            xTrial = problem.prox(xPrevious - gamma * gradientPrevious, gamma)
            gradientTrial = problem.gradient(xTrial)
            residual = terminationResidual(
                xPrevious, xTrial, gamma, gradientPrevious, gradientTrial
            )

            if config.terminationInLoop and residual <= config.epsilon:
                return Terminated(
                    x=xTrial,
                    gamma=gamma,
                    backtracks=backtracks,
                    residual=residual,
                )

            phiTrial = problem.objective(xTrial)
            stepSquared = squaredNorm(xTrial - xPrevious)

            if acceptable(phiTrial, merit, gamma, config.alpha, stepSquared):
                return Accepted(
                    x=xTrial,
                    gradient=gradientTrial,
                    phi=phiTrial,
                    gamma=gamma,
                    backtracks=backtracks,
                    stepSquared=stepSquared,
                    residual=residual,
                )

            if (
                backtracks >= config.maxBacktracks
                or gamma * config.beta < config.gammaMin
            ):
                return BacktrackLimit(
                    gamma=gamma, backtracks=backtracks, residual=residual
                )

            gamma *= config.beta
            backtracks += 1

    def restart(self, x0: Point) -> Point:
        """
        Take one proximal gradient step with the initial stepsize, landing in
        the domain of the nonsmooth term.
        """
        gamma = self.config.clampStepsize(self.config.gammaInitial)
        self._log.info(
            "Starting point of {problem} is infeasible; "
            "restarting after one proximal gradient step",
            problem=self.problem.name,
        )
        return self.problem.prox(x0 - gamma * self.problem.gradient(x0), gamma)

    def solve(self, x0: Point) -> SolveResult:
        """
        Minimize the problem starting from ``x0``.

        Evaluation counts in the result and trace are relative to the start
        of this call.

        :raises DimensionMismatchError: if ``x0`` has the wrong dimension.
        """
        config = self.config
        problem = self.problem
        start = problem.counts()

        def counts() -> EvaluationCounts:
            return problem.counts() - start

        def record(**kwargs: float | int) -> IterationRecord:
            current = counts()
            return IterationRecord(
                proxEvaluations=current.prox,
                gradientEvaluations=current.gradient,
                smoothEvaluations=current.smooth,
                nonsmoothEvaluations=current.nonsmooth,
                **kwargs,  # type: ignore[arg-type]
            )

        x = asPoint(x0)
        phi = problem.objective(x)
        restarted = False

        if phi == inf and config.restartInfeasible:
            x = self.restart(x)
            phi = problem.objective(x)
            restarted = True

        if phi == inf:
            self._log.warn(
                "Starting point of {problem} is infeasible",
                problem=problem.name,
            )
            return SolveResult(
                status=SolveStatus.infeasibleStart,
                xFinal=x,
                xPrevious=x,
                phiFinal=inf,
                finalResidual=inf,
                gammaFinal=config.clampStepsize(config.gammaInitial),
                iterations=0,
                backtracks=0,
                counts=counts(),
                trace=Trace(),
            )
        merit = MeritState.initial(phi, config)

        stepsizes = StepsizeStrategy(config=config)
        gradient = problem.gradient(x)
        gamma = stepsizes.propose()

        records = [
            record(
                k=0,
                gamma=gamma,
                phi=phi,
                merit=merit.value,
                residual=0.0,
                backtracks=0,
                stepNorm=0.0,
            )
        ]
        totalBacktracks = 0
        xPrevious = x
        residual = inf

        def result(
            status: SolveStatus, xFinal: Point, phiFinal: float, k: int
        ) -> SolveResult:
            self._log.info(
                "{problem} ({variant}): {status} after {iterations} "
                "iterations, objective {phi}, residual {residual}",
                problem=problem.name,
                variant=config.variantName,
                status=status,
                iterations=k,
                phi=phiFinal,
                residual=residual,
            )
            return SolveResult(
                status=status,
                xFinal=xFinal,
                xPrevious=xPrevious,
                phiFinal=phiFinal,
                finalResidual=residual,
                gammaFinal=gamma,
                iterations=k,
                backtracks=totalBacktracks,
                counts=counts(),
                trace=Trace(records=records),
                restarted=restarted,
            )

        for k in range(1, config.maxIterations + 1):
            gamma = stepsizes.propose()
            outcome = self.step(x, gradient, gamma, merit.value)

            totalBacktracks += outcome.backtracks
            gamma = outcome.gamma
            residual = outcome.residual
            xPrevious = x

            if isinstance(outcome, Terminated):
                return result(
                    SolveStatus.converged,
                    outcome.x,
                    problem.objective(outcome.x),
                    k,
                )

            if isinstance(outcome, BacktrackLimit):
                self._log.warn(
                    "{problem}: no acceptable step after {backtracks} "
                    "backtracks in iteration {k}",
                    problem=problem.name,
                    backtracks=outcome.backtracks,
                    k=k,
                )
                return result(SolveStatus.maxBacktracks, x, phi, k)

            merit.update(outcome.phi)
            stepsizes.observe(gamma, x, outcome.x, gradient, outcome.gradient)

            stepNorm = sqrt(outcome.stepSquared)
            records.append(
                record(
                    k=k,
                    gamma=gamma,
                    phi=outcome.phi,
                    merit=merit.value,
                    residual=stepNorm / gamma,
                    backtracks=outcome.backtracks,
                    stepNorm=stepNorm,
                )
            )
            self._log.debug(
                "{problem} iteration {k}: gamma={gamma} phi={phi} "
                "merit={merit} backtracks={backtracks}",
                problem=problem.name,
                k=k,
                gamma=gamma,
                phi=outcome.phi,
                merit=merit.value,
                backtracks=outcome.backtracks,
            )

            x, gradient, phi = outcome.x, outcome.gradient, outcome.phi

            if not config.terminationInLoop and residual <= config.epsilon:
                return result(SolveStatus.converged, x, phi, k)

        return result(SolveStatus.maxIterations, x, phi, config.maxIterations)


def solve(
    problem: Problem, x0: Point, config: SolverConfig | None = None
) -> SolveResult:
    """
    Minimize ``problem`` starting from ``x0``.
    """
    if config is None:
        config = SolverConfig()
    return Solver(problem=problem, config=config).solve(x0)
