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
Run nmprox commands.
"""

import sys
from collections.abc import Mapping, Sequence
from pathlib import Path
from typing import Any, ClassVar, cast

from attrs import frozen
from twisted.application.runner._exit import exit
from twisted.logger import Logger
from twisted.python.usage import UsageError

from nmprox.bench import (
    BenchmarkError,
    InstanceSpec,
    ProfileMetric,
    SuiteSpec,
    checkOrdering,
    performanceProfile,
    runSuite,
    suiteMetadata,
)
from nmprox.config import Configuration, ConfigurationError
from nmprox.diagnostics import diagnose
from nmprox.ext.json import jsonTextFromObject, objectFromJSONText
from nmprox.model import SolveResult
from nmprox.model.json import (
    JSONCodecError,
    jsonObjectFromModelObject,
    modelObjectFromJSONObject,
)
from nmprox.problem import ProblemError
from nmprox.solver import solve
from nmprox.store import (
    ProfileExporter,
    StorageError,
    SuiteTableExporter,
    SuiteTableImporter,
    TraceExporter,
    TraceFormatError,
    TraceImporter,
)

from ._json import runSpecFromFile
from ._log import startLogging
from ._options import (
    BenchOptions,
    DiagnoseOptions,
    NMProxOptions,
    ProfileOptions,
    SolveOptions,
    openedFile,
)
from ._spec import RunSpec
from ._status import ExitCode


__all__ = ()


def writeJSON(fileName: str, obj: Any) -> None:
    with openedFile(fileName, "w") as io:
        io.write(jsonTextFromObject(obj, pretty=True))
        io.write("\n")


def readJSON(path: Path) -> Any:
    with openedFile(str(path), "r") as io:
        return objectFromJSONText(io.read())


@frozen(kw_only=True)
class Command:
    """
    Run nmprox commands.
    """

    log: ClassVar[Logger] = Logger()

    @staticmethod
    def options(argv: Sequence[str]) -> NMProxOptions:
        """
        Parse command line options.
        """
        options = NMProxOptions()

        try:
            options.parseOptions(argv[1:])
        except UsageError as e:
            exit(ExitCode.usage, f"Error: {e}\n\n{options}")

        return options

    @classmethod
    def runSpec(cls, options: Mapping[str, Any]) -> RunSpec:
        """
        The run specification named by ``options``, or the default one, with
        solver overrides from ``options`` applied.
        """
        if "specFile" in options:
            spec = runSpecFromFile(options["specFile"])
        else:
            spec = RunSpec()

        return spec.withSolverOverrides(**options.get("overrides", {}))

    @classmethod
    def runSolve(
        cls, configuration: Configuration, options: SolveOptions
    ) -> ExitCode:
        spec = cls.runSpec(options)
        traceFile = options.get("traceFile", spec.traceFile)
        resultFile = options.get("resultFile", spec.resultFile) or Path("-")

        problem, x0 = spec.problem.build()
        cls.log.info(
            "Solving {problem} of dimension {dim} with {variant}",
            problem=problem.name,
            dim=problem.dim,
            variant=spec.solver.variantName,
        )
        result = solve(problem, x0, spec.solver)

        if traceFile is not None:
            with openedFile(str(traceFile), "w") as io:
                TraceExporter(trace=result.trace).writeTo(io)

        writeJSON(str(resultFile), jsonObjectFromModelObject(result))

        if result.converged:
            return ExitCode.ok
        return ExitCode.notConverged

    @classmethod
    def runDiagnose(
        cls, configuration: Configuration, options: DiagnoseOptions
    ) -> ExitCode:
        spec = cls.runSpec(options)

        finalResidual: float | None = None
        if "resultFile" in options:
            result = cast(
                SolveResult,
                modelObjectFromJSONObject(
                    readJSON(options["resultFile"]), SolveResult
                ),
            )
            finalResidual = result.finalResidual

        with openedFile(str(options["traceFile"]), "r") as io:
            try:
                trace = TraceImporter.fromIO(io).trace
            except TraceFormatError as e:
                cls.log.error("Unreadable trace: {error}", error=e.message)
                options["stderr"].write(f"Error: {e.message}\n")
                return ExitCode.checkFailed

        report = diagnose(trace, spec.solver, finalResidual)
        writeJSON(str(options.get("reportFile", "-")), report.asJSON())

        if report.passed:
            return ExitCode.ok
        return ExitCode.checkFailed

    @classmethod
    def runBench(
        cls, configuration: Configuration, options: BenchOptions
    ) -> ExitCode:
        if "instanceFile" in options:
            instance = cast(
                InstanceSpec,
                modelObjectFromJSONObject(
                    readJSON(options["instanceFile"]), InstanceSpec
                ),
            )
        else:
            instance = InstanceSpec()

        suite = SuiteSpec(
            instance=instance,
            instances=options.get("instances", configuration.instances),
            seed=options.get("seed", configuration.seed),
            epsilon=options.get("epsilon", SuiteSpec().epsilon),
        )
        configs = suite.variants()

        rows = runSuite(
            suite.instanceSpecs(),
            configs,
            parallel=options.get("parallel", configuration.parallel),
        )
        checkOrdering(rows)

        outFile = options.get("outFile", Path("-"))
        with openedFile(str(outFile), "w") as io:
            SuiteTableExporter(rows=rows).writeTo(io)

        if str(outFile) not in ("-", "+"):
            metadataFile = outFile.with_suffix(".meta.json")
            writeJSON(str(metadataFile), suiteMetadata(suite, configs))
            cls.log.info("Wrote suite metadata to {path}", path=metadataFile)

        return ExitCode.ok

    @classmethod
    def runProfile(
        cls, configuration: Configuration, options: ProfileOptions
    ) -> ExitCode:
        with openedFile(str(options["resultsFile"]), "r") as io:
            rows = SuiteTableImporter.fromIO(io).rows

        curves = performanceProfile(
            rows, options.get("metric", ProfileMetric.prox)
        )
        ProfileExporter(curves=curves).writeToDirectory(
            options.get("outDirectory", Path("."))
        )

        return ExitCode.ok

    @classmethod
    def run(cls, options: NMProxOptions) -> ExitCode:
        """
        Run the chosen subcommand.

        :return: The exit code of the subcommand.
        """
        configuration: Configuration = options["configuration"]
        subCommand = options.subCommand
        subOptions = options.subOptions

        try:
            if subCommand == "solve":
                return cls.runSolve(configuration, subOptions)
            elif subCommand == "diagnose":
                return cls.runDiagnose(configuration, subOptions)
            elif subCommand == "bench":
                return cls.runBench(configuration, subOptions)
            elif subCommand == "profile":
                return cls.runProfile(configuration, subOptions)
            else:
                raise AssertionError(f"Unknown subcommand: {subCommand}")
        except (
            BenchmarkError,
            ConfigurationError,
            JSONCodecError,
            OSError,
            ProblemError,
            StorageError,
            ValueError,
        ) as e:
            error = str(e)

        cls.log.critical(
            "Unable to run {subCommand}: {error}",
            subCommand=subCommand,
            error=error,
        )
        subOptions["stderr"].write(f"Error: {error}\n")
        return ExitCode.usage

    @classmethod
    def main(cls, argv: Sequence[str] = sys.argv) -> None:
        """
        Executable entry point for :class:`Command`.
        Processes options, runs the chosen subcommand and exits with its exit
        code.
        """
        options = cls.options(argv)
        startLogging(options)
        exit(cls.run(options))
