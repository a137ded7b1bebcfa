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
Trace checks

Each check is a pure function of a trace and the solver configuration that
produced it, verifying inequalities that every iteration of the method must
satisfy.
"""

from collections.abc import Iterable
from math import inf, isnan, sqrt

from attrs import Factory, mutable
from twisted.logger import Logger

from nmprox.model import IterationRecord, MeritFlavor, SolverConfig, Trace

from ._report import CheckResult, CheckStatus, DiagnosticsReport


__all__ = ()


log = Logger()


# Iterations needed before the residual trend means anything.
TREND_MINIMUM_ITERATIONS = 8


def tolerance(trace: Trace) -> float:
    """
    Absolute tolerance for the inequalities checked on ``trace``.
    """
    scale = abs(trace[0].merit) if len(trace) else 0.0
    return 1e-8 + 1e-10 * max(1.0, scale)


def decrease(record: IterationRecord, config: SolverConfig) -> float:
    """
    Guaranteed decrease ``(1 - alpha) / (2 gamma) ||x^k - x^{k-1}||^2`` of
    the step leading to ``record``.
    """
    return (1.0 - config.alpha) / (2.0 * record.gamma) * record.stepNorm**2


@mutable
class _Margins:
    """
    Tracks the smallest slack over a set of inequalities.
    """

    name: str
    margins: list[tuple[float, int]] = Factory(list)

    def add(self, slack: float, k: int) -> None:
        self.margins.append((slack, k))

    def result(self, tolerance: float) -> CheckResult:
        if not self.margins:
            return CheckResult(check=self.name, status=CheckStatus.passed)

        margin, index = min(
            self.margins, key=lambda pair: -inf if isnan(pair[0]) else pair[0]
        )
        if isnan(margin) or margin < -tolerance:
            log.warn(
                "Check {check} failed at iteration {index} by {margin}",
                check=self.name,
                index=index,
                margin=margin,
            )
            status = CheckStatus.failed
        else:
            status = CheckStatus.passed

        return CheckResult(
            check=self.name, status=status, margin=margin, index=index
        )


def _notApplicable(name: str) -> CheckResult:
    return CheckResult(check=name, status=CheckStatus.notApplicable)


def _steps(trace: Trace) -> Iterable[tuple[IterationRecord, IterationRecord]]:
    return zip(trace, trace[1:])


def verifySufficientDecrease(trace: Trace, config: SolverConfig) -> CheckResult:
    """
    Check that every accepted iteration decreases the averaged merit enough:
    ``phi_k + (1 - p) delta_k <= Phi_k <= Phi_{k-1} - p delta_k``.
    Applies to the average and monotone flavors.
    """
    name = "sufficient_decrease"
    if config.flavor is MeritFlavor.max:
        return _notApplicable(name)

    p = config.meritWeight
    margins = _Margins(name)

    for previous, record in _steps(trace):
        delta = decrease(record, config)
        margins.add(
            min(
                record.merit - record.phi - (1.0 - p) * delta,
                previous.merit - p * delta - record.merit,
            ),
            record.k,
        )

    return margins.result(tolerance(trace))


def verifySummability(trace: Trace, config: SolverConfig) -> CheckResult:
    """
    Check that the accumulated guaranteed decrease never exceeds the total
    decrease of the merit: ``sum_{j <= k} p delta_j <= Phi_0 - Phi_k``.
    Applies to the average and monotone flavors.
    """
    name = "summability"
    if config.flavor is MeritFlavor.max:
        return _notApplicable(name)

    p = config.meritWeight
    margins = _Margins(name)
    total = 0.0

    for record in trace.iterations:
        total += p * decrease(record, config)
        margins.add(trace[0].merit - record.merit - total, record.k)

    return margins.result(tolerance(trace))


def verifyRateBounds(trace: Trace, config: SolverConfig) -> CheckResult:
    """
    Check the worst-case rates: after ``k`` iterations the smallest step
    length is at most ``sqrt(2 gamma_max (phi_0 - Phi_K) / (p (1 - alpha)))
    / sqrt(k)``, and the smallest fixed-point residual at most
    ``sqrt(2 (phi_0 - Phi_K) / (gamma_* p (1 - alpha))) / sqrt(k)``, where
    ``gamma_max`` and ``gamma_*`` are the largest and smallest stepsizes used
    and ``Phi_K`` the final merit value.
    Applies to the average and monotone flavors.
    """
    name = "rate_bounds"
    if config.flavor is MeritFlavor.max:
        return _notApplicable(name)

    iterations = trace.iterations
    margins = _Margins(name)
    if not iterations:
        return margins.result(tolerance(trace))

    gammaLargest = min(
        max(record.gamma for record in iterations), config.gammaMax
    )
    gammaSmallest = min(record.gamma for record in iterations)
    weight = config.meritWeight * (1.0 - config.alpha)
    available = max(0.0, trace[0].phi - iterations[-1].merit)

    stepScale = sqrt(2.0 * gammaLargest * available / weight)
    residualScale = sqrt(2.0 * available / (gammaSmallest * weight))

    smallestStep = inf
    smallestResidual = inf

    for count, record in enumerate(iterations, start=1):
        smallestStep = min(smallestStep, record.stepNorm)
        smallestResidual = min(smallestResidual, record.residual)
        root = sqrt(count)
        margins.add(
            min(
                stepScale / root - smallestStep,
                residualScale / root - smallestResidual,
            ),
            record.k,
        )

    return margins.result(1e-8)


def verifyResidualTrend(
    trace: Trace, config: SolverConfig, finalResidual: float | None = None
) -> CheckResult:
    """
    Soft check that the fixed-point residual tends to zero: the smallest
    residual occurs in the last quarter of the iterations, or the final
    termination residual is within tolerance.
    Only warns, since the residual need not decrease monotonically.
    """
    name = "residual_trend"
    iterations = trace.iterations
    if len(iterations) < TREND_MINIMUM_ITERATIONS:
        return _notApplicable(name)

    best = min(range(len(iterations)), key=lambda i: iterations[i].residual)
    index = iterations[best].k

    if finalResidual is not None and finalResidual <= config.epsilon:
        status = CheckStatus.passed
    elif best >= (3 * len(iterations)) // 4:
        status = CheckStatus.passed
    else:
        log.warn(
            "Smallest residual at iteration {index} of {count}",
            index=index,
            count=len(iterations),
        )
        status = CheckStatus.warning

    return CheckResult(
        check=name,
        status=status,
        margin=iterations[best].residual,
        index=index,
    )


def verifyMeritBound(trace: Trace, config: SolverConfig) -> CheckResult:
    """
    Check that every objective value is bounded by its merit value, and for
    the average and monotone flavors also by the initial objective value.
    """
    name = "merit_bound"
    margins = _Margins(name)
    if not len(trace):
        return margins.result(0.0)

    phi0 = trace[0].phi
    averaging = config.flavor is not MeritFlavor.max

    for record in trace:
        slack = record.merit - record.phi
        if averaging:
            slack = min(slack, phi0 - record.phi)
        margins.add(slack, record.k)

    return margins.result(tolerance(trace))


def verifyMaxMerit(trace: Trace, config: SolverConfig) -> CheckResult:
    """
    Check that each merit value of the max flavor is the largest of the last
    ``memory + 1`` objective values, and that each accepted objective value
    lies below the previous merit value by the guaranteed decrease.
    Applies to the max flavor.
    """
    name = "max_merit"
    if config.flavor is not MeritFlavor.max:
        return _notApplicable(name)

    margins = _Margins(name)
    phis = [record.phi for record in trace]

    for record in trace:
        window = phis[max(0, record.k - config.memory) : record.k + 1]
        margins.add(-abs(record.merit - max(window)), record.k)

    for previous, record in _steps(trace):
        margins.add(
            previous.merit - decrease(record, config) - record.phi, record.k
        )

    return margins.result(tolerance(trace))


def diagnose(
    trace: Trace, config: SolverConfig, finalResidual: float | None = None
) -> DiagnosticsReport:
    """
    Run every trace check.

    :param finalResidual: The termination residual of the solve, if known.
    """
    report = DiagnosticsReport(
        results=(
            verifySufficientDecrease(trace, config),
            verifySummability(trace, config),
            verifyRateBounds(trace, config),
            verifyResidualTrend(trace, config, finalResidual),
            verifyMeritBound(trace, config),
            verifyMaxMerit(trace, config),
        )
    )
    log.info(
        "Diagnosed trace with {count} records: {failures} failed checks",
        count=len(trace),
        failures=len(report.failures),
    )
    return report
