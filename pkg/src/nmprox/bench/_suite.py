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
Dictionary learning benchmark suite
"""

from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from itertools import product
from math import isnan, nan
from typing import Any

import numpy as np
from attrs import field, frozen
from twisted.logger import Logger

from nmprox.config import ConfigurationError
from nmprox.model import (
    ERROR_STATUS,
    MeritFlavor,
    SolverConfig,
    StepsizeKind,
    SuiteRow,
)
from nmprox.model.json import jsonObjectFromModelObject
from nmprox.problem import ProblemError
from nmprox.solver import solve

from ._dictlearn import dictLearnProblem
from ._instance import InstanceSpec


__all__ = ()


log = Logger()


FAST_VARIANT = "spectral_average"
BASELINE_VARIANT = "plain_monotone"


def suiteVariants(base: SolverConfig | None = None) -> tuple[SolverConfig, ...]:
    """
    The six solver variants compared by the suite: each stepsize strategy
    with each merit flavor, other parameters taken from ``base``.
    """
    if base is None:
        base = SolverConfig()
    return tuple(
        base.replace(stepsize=stepsize, flavor=flavor)
        for stepsize, flavor in product(StepsizeKind, MeritFlavor)
    )


@frozen(kw_only=True)
class SuiteSpec:
    """
    Benchmark suite: ``instances`` instances shaped like ``instance`` with
    consecutive seeds starting at ``seed``, each solved by every variant to
    tolerance ``epsilon``.
    """

    instance: InstanceSpec = field(factory=InstanceSpec)
    instances: int = 100
    seed: int = 0
    epsilon: float = 1e-6

    def __attrs_post_init__(self) -> None:
        if self.instances < 0:
            raise ConfigurationError(
                f"Instance count must be nonnegative, not {self.instances}"
            )

    def instanceSpecs(self) -> list[InstanceSpec]:
        return [
            self.instance.withSeed(self.seed + index)
            for index in range(self.instances)
        ]

    def variants(self) -> tuple[SolverConfig, ...]:
        return suiteVariants(SolverConfig(epsilon=self.epsilon))


def runCase(instance: InstanceSpec, config: SolverConfig) -> SuiteRow:
    """
    Solve one instance with one variant, recording a failure as a row with
    status ``"error"``.
    """
    generated = instance.generate()
    problem = dictLearnProblem(generated)
    variant = config.variantName

    try:
        result = solve(problem, generated.startingPoint(), config)
    except ProblemError as e:
        log.error(
            "Instance {seed} variant {variant} failed: {error}",
            seed=instance.seed,
            variant=variant,
            error=e.message,
        )
        counts = problem.counts()
        return SuiteRow(
            instanceSeed=instance.seed,
            variant=variant,
            status=ERROR_STATUS,
            iterations=0,
            proxEvaluations=counts.prox,
            gradientEvaluations=counts.gradient,
            phiFinal=nan,
            residualFinal=nan,
        )

    log.info(
        "Instance {seed} variant {variant}: {status} after {iterations} "
        "iterations and {prox} prox evaluations",
        seed=instance.seed,
        variant=variant,
        status=result.status,
        iterations=result.iterations,
        prox=result.counts.prox,
    )
    return SuiteRow(
        instanceSeed=instance.seed,
        variant=variant,
        status=result.status.value,
        iterations=result.iterations,
        proxEvaluations=result.counts.prox,
        gradientEvaluations=result.counts.gradient,
        phiFinal=result.phiFinal,
        residualFinal=result.finalResidual,
    )


def _runCase(case: tuple[InstanceSpec, SolverConfig]) -> SuiteRow:
    return runCase(*case)


def runSuite(
    instances: Iterable[InstanceSpec],
    configs: Sequence[SolverConfig],
    epsilon: float | None = None,
    parallel: int = 1,
) -> list[SuiteRow]:
    """
    Solve every instance with every variant.

    Rows are ordered by instance, then variant, whatever the degree of
    parallelism.

    :param epsilon: Termination tolerance overriding that of each variant.
    :param parallel: Number of worker processes; ``1`` runs in this process.
    """
    if epsilon is not None:
        configs = [config.replace(epsilon=epsilon) for config in configs]
    if parallel < 1:
        raise ConfigurationError(
            f"Parallelism must be at least 1, not {parallel}"
        )

    cases = list(product(instances, configs))
    log.info(
        "Running {count} benchmark cases on {parallel} processes",
        count=len(cases),
        parallel=parallel,
    )

    if parallel == 1 or len(cases) < 2:
        return [_runCase(case) for case in cases]

    with ProcessPoolExecutor(max_workers=parallel) as executor:
        return list(executor.map(_runCase, cases))


def medianProxEvaluations(rows: Iterable[SuiteRow], variant: str) -> float:
    """
    Median proximal evaluation count of the converged runs of ``variant``, or
    ``nan`` if none converged.
    """
    counts = [
        row.proxEvaluations
        for row in rows
        if row.variant == variant and row.converged
    ]
    if not counts:
        return nan
    return float(np.median(counts))


def checkOrdering(rows: Sequence[SuiteRow]) -> bool:
    """
    Check that the spectral average variant needs no more proximal
    evaluations than the plain monotone one, in median.
    Logs a warning otherwise; a violation is not an error.
    Passes when either variant has no converged run.
    """
    fast = medianProxEvaluations(rows, FAST_VARIANT)
    baseline = medianProxEvaluations(rows, BASELINE_VARIANT)

    if isnan(fast) or isnan(baseline) or fast <= baseline:
        return True

    log.warn(
        "Median prox evaluations of {fast} ({fastMedian}) exceed those of "
        "{baseline} ({baselineMedian})",
        fast=FAST_VARIANT,
        fastMedian=fast,
        baseline=BASELINE_VARIANT,
        baselineMedian=baseline,
    )
    return False


def suiteMetadata(
    spec: SuiteSpec, configs: Sequence[SolverConfig]
) -> dict[str, Any]:
    """
    Description of a suite run, recording the choices its results depend on
    beyond the instance dimensions and solver parameters.
    """
    return {
        "instance": jsonObjectFromModelObject(spec.instance),
        "instances": spec.instances,
        "seed": spec.seed,
        "rng": "numpy PCG64 (default_rng), ziggurat standard normals",
        "support": "rng.permutation(l)[:N] per coefficient column",
        "dictionary_start": "normalized columns",
        "objective_profile": "fraction of runs with phi_final <= threshold, "
        "thresholds swept over the observed final values",
        "variants": {
            config.variantName: jsonObjectFromModelObject(config)
            for config in configs
        },
    }
