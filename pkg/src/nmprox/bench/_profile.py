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
Performance profiles
"""

from collections.abc import Callable, Sequence
from math import isfinite

from nmprox.ext.enum import Names, auto, unique
from nmprox.model import ProfileCurve, SuiteRow

from ._exceptions import BenchmarkError


__all__ = ()


@unique
class ProfileMetric(Names):
    """
    Budgets a performance profile sweeps.

      * Prox: proximal evaluations at termination.
      * Objective: final objective value.
    """

    prox = auto()
    objective = auto()


def metricValue(metric: ProfileMetric) -> Callable[[SuiteRow], float]:
    if metric is ProfileMetric.prox:
        return lambda row: float(row.proxEvaluations)
    if metric is ProfileMetric.objective:
        return lambda row: row.phiFinal
    raise AssertionError(f"Unhandled ProfileMetric: {metric}")


def performanceProfile(
    rows: Sequence[SuiteRow], metric: ProfileMetric
) -> list[ProfileCurve]:
    """
    Fraction of runs of each variant solved within each budget.

    A run is solved within budget ``t`` if it converged and its metric value
    is at most ``t``.
    Budgets are the distinct metric values of all converged runs, in
    increasing order, shared by every curve; each curve starts with a zero
    fraction at the smallest budget, so it steps up from zero there.
    Fractions are relative to all runs of the variant, so a curve reaches
    one only if every run converged.
    Variants appear in the order of their first row.

    :raises BenchmarkError: if ``rows`` is empty.
    """
    if not rows:
        raise BenchmarkError("No benchmark results to profile")

    value = metricValue(metric)

    runs: dict[str, int] = {}
    solved: dict[str, list[float]] = {}
    for row in rows:
        runs[row.variant] = runs.get(row.variant, 0) + 1
        values = solved.setdefault(row.variant, [])
        if row.converged and isfinite(value(row)):
            values.append(value(row))

    observed = sorted({v for values in solved.values() for v in values})
    budgets = tuple(observed[:1] + observed)

    def fraction(variant: str, budget: float, index: int) -> float:
        if index == 0:
            return 0.0
        return sum(1 for v in solved[variant] if v <= budget) / runs[variant]

    return [
        ProfileCurve(
            variant=variant,
            budgets=budgets,
            fractions=tuple(
                fraction(variant, budget, index)
                for index, budget in enumerate(budgets)
            ),
        )
        for variant in runs
    ]
