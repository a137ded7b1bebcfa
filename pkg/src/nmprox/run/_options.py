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
Command line options for nmprox.
"""

from collections.abc import (
    Callable,
    Iterator,
    Mapping,
    MutableMapping,
    Sequence,
)
from contextlib import contextmanager
from pathlib import Path
from sys import stderr, stdin, stdout
from textwrap import dedent
from typing import IO, Any, ClassVar, TypeVar, cast

from twisted.application.runner._exit import ExitStatus, exit
from twisted.logger import (
    InvalidLogLevelError,
    Logger,
    LogLevel,
    jsonFileLogObserver,
    textFileLogObserver,
)
from twisted.python.usage import Options as BaseOptions
from twisted.python.usage import UsageError

from nmprox import __version__ as version
from nmprox.bench import ProfileMetric
from nmprox.config import Configuration, LogFormat
from nmprox.ext.enum import Enum, memberWithName
from nmprox.model import MeritFlavor, StepsizeKind

from ._status import ExitCode


__all__ = ()


T = TypeVar("T")
E = TypeVar("E", bound=Enum)


def openFile(fileName: str, mode: str) -> IO[Any]:
    """
    Open a file, given a name.
    Handles "+" and "-" as stdin/stdout.

    :raises OSError: if the file cannot be opened.
    """
    if any((c in mode) for c in "wxa"):
        if fileName == "-":
            return stdout
        elif fileName == "+":
            return stderr
    else:
        if fileName == "-":
            return stdin

    return open(fileName, mode)


@contextmanager
def openedFile(fileName: str, mode: str) -> Iterator[IO[Any]]:
    """
    Context manager for :func:`openFile` that closes named files only.
    """
    file = openFile(fileName, mode)
    try:
        yield file
    finally:
        if file not in (stdin, stdout, stderr):
            file.close()


def parseValue(parse: Callable[[str], T], text: str, what: str) -> T:
    try:
        return parse(text)
    except ValueError:
        raise UsageError(f"Invalid {what}: {text}") from None


def parseName(enum: type[E], name: str, what: str) -> E:
    try:
        return memberWithName(enum, name)
    except KeyError:
        raise UsageError(f"Invalid {what}: {name}") from None


def namesOf(enum: type[Enum]) -> str:
    return ", ".join(f'"{member.name}"' for member in enum)  # noqa: B907


class Options(BaseOptions):
    """
    Options, cleaned up
    """

    def opt_version(self) -> None:
        """
        Print version and exit.
        """
        exit(ExitStatus.EX_OK, f"{version}")


class SolverOverrideOptions(Options):
    """
    Options overriding solver parameters of a run specification.
    """

    def override(self, name: str, value: Any) -> None:
        overrides = cast(MutableMapping[str, Any], self).setdefault(
            "overrides", {}
        )
        overrides[name] = value

    def opt_epsilon(self, value: str) -> None:
        """
        Termination tolerance.
        """
        self.override("epsilon", parseValue(float, value, "tolerance"))

    def opt_max_iters(self, value: str) -> None:
        """
        Iteration budget.
        """
        self.override(
            "maxIterations", parseValue(int, value, "iteration budget")
        )

    def opt_flavor(self, name: str) -> None:
        """
        Merit flavor.
        (options: {options})
        """
        self.override("flavor", parseName(MeritFlavor, name, "merit flavor"))

    opt_flavor.__doc__ = dedent(cast(str, opt_flavor.__doc__)).format(
        options=namesOf(MeritFlavor)
    )

    def opt_stepsize(self, name: str) -> None:
        """
        Stepsize strategy.
        (options: {options})
        """
        self.override(
            "stepsize", parseName(StepsizeKind, name, "stepsize strategy")
        )

    opt_stepsize.__doc__ = dedent(cast(str, opt_stepsize.__doc__)).format(
        options=namesOf(StepsizeKind)
    )


class SolveOptions(SolverOverrideOptions):
    """
    Command line options for solving a problem.
    """

    def opt_spec(self, fileName: str) -> None:
        """
        Run specification JSON file. (default: the one-dimensional lasso)
        """
        self["specFile"] = Path(fileName)

    def opt_out_trace(self, fileName: str) -> None:
        """
        Trace CSV file. ("-" for stdout, "+" for stderr)
        """
        self["traceFile"] = Path(fileName)

    def opt_out_result(self, fileName: str) -> None:
        """
        Result JSON file. ("-" for stdout, "+" for stderr; default: "-")
        """
        self["resultFile"] = Path(fileName)


class DiagnoseOptions(SolverOverrideOptions):
    """
    Command line options for checking a trace.
    """

    def opt_trace(self, fileName: str) -> None:
        """
        Trace CSV file. ("-" for stdin)
        """
        self["traceFile"] = Path(fileName)

    def opt_spec(self, fileName: str) -> None:
        """
        Run specification JSON file the trace was produced with.
        """
        self["specFile"] = Path(fileName)

    def opt_result(self, fileName: str) -> None:
        """
        Result JSON file of the solve, for its final residual.
        """
        self["resultFile"] = Path(fileName)

    def opt_output(self, fileName: str) -> None:
        """
        Report JSON file. ("-" for stdout, "+" for stderr; default: "-")
        """
        self["reportFile"] = Path(fileName)

    def postOptions(self) -> None:
        super().postOptions()

        if "traceFile" not in self:
            raise UsageError("No trace specified.")


class BenchOptions(Options):
    """
    Command line options for running the benchmark suite.
    """

    def opt_instances(self, value: str) -> None:
        """
        Number of instances.
        """
        self["instances"] = parseValue(int, value, "instance count")

    def opt_seed(self, value: str) -> None:
        """
        Seed of the first instance.
        """
        self["seed"] = parseValue(int, value, "seed")

    def opt_parallel(self, value: str) -> None:
        """
        Number of worker processes.
        """
        self["parallel"] = parseValue(int, value, "parallelism")

    def opt_epsilon(self, value: str) -> None:
        """
        Termination tolerance. (default: 1e-6)
        """
        self["epsilon"] = parseValue(float, value, "tolerance")

    def opt_instance(self, fileName: str) -> None:
        """
        Instance shape JSON file, with keys "n", "l", "m", "N" and "lambda".
        """
        self["instanceFile"] = Path(fileName)

    def opt_out(self, fileName: str) -> None:
        """
        Result table CSV file, with a metadata JSON file beside it.
        ("-" for stdout, without metadata; default: "-")
        """
        self["outFile"] = Path(fileName)


class ProfileOptions(Options):
    """
    Command line options for computing performance profiles.
    """

    def opt_results(self, fileName: str) -> None:
        """
        Result table CSV file. ("-" for stdin)
        """
        self["resultsFile"] = Path(fileName)

    def opt_metric(self, name: str) -> None:
        """
        Budget to profile.
        (options: {options}; default: "prox")
        """
        self["metric"] = parseName(ProfileMetric, name, "metric")

    opt_metric.__doc__ = dedent(cast(str, opt_metric.__doc__)).format(
        options=namesOf(ProfileMetric)
    )

    def opt_out_dir(self, path: str) -> None:
        """
        Directory for the profile data files. (default: ".")
        """
        self["outDirectory"] = Path(path)

    def postOptions(self) -> None:
        super().postOptions()

        if "resultsFile" not in self:
            raise UsageError("No result table specified.")


class NMProxOptions(Options):
    """
    Command line options for all nmprox commands.
    """

    log: ClassVar[Logger] = Logger()
    defaultLogLevel: ClassVar = LogLevel.info

    subCommands: ClassVar = [
        ["solve", None, SolveOptions, "Solve a problem"],
        ["diagnose", None, DiagnoseOptions, "Check a solver trace"],
        ["bench", None, BenchOptions, "Run the benchmark suite"],
        ["profile", None, ProfileOptions, "Compute performance profiles"],
    ]

    def getSynopsis(self) -> str:
        return f"{Options.getSynopsis(self)} command [command_options]"

    def opt_config(self, path: str) -> None:
        """
        Location of configuration file.
        """
        cast(MutableMapping[str, Any], self)["configFile"] = Path(path)

    def opt_log_level(self, levelName: str) -> None:
        """
        Set default log level.
        (options: {options}; default: "{default}")
        """
        try:
            self["logLevel"] = LogLevel.levelWithName(levelName)
        except InvalidLogLevelError as e:
            raise UsageError(f"Invalid log level: {levelName}") from e

    opt_log_level.__doc__ = dedent(cast(str, opt_log_level.__doc__)).format(
        options=", ".join(
            f'"{level.name}"'  # noqa: B907
            for level in LogLevel.iterconstants()
        ),
        default=defaultLogLevel.name,
    )

    def opt_log_file(self, fileName: str) -> None:
        """
        Log to file. ("-" for stdout, "+" for stderr; default: "+")
        """
        self["logFileName"] = fileName

    def opt_log_format(self, logFormatName: str) -> None:
        """
        Log file format.
        (options: "text", "json"; default: "text" if the log file is a tty,
        otherwise "json")
        """
        try:
            logFormat = LogFormat[logFormatName.lower()]
        except KeyError:
            raise UsageError(f"Invalid log format: {logFormatName}") from None

        if logFormat is LogFormat.text:
            self["fileLogObserverFactory"] = textFileLogObserver
        elif logFormat is LogFormat.json:
            self["fileLogObserverFactory"] = jsonFileLogObserver
        else:
            raise AssertionError(f"Unhandled LogFormat: {logFormat}")

        self["logFormat"] = logFormat

    opt_log_format.__doc__ = dedent(cast(str, opt_log_format.__doc__))

    def initConfig(self) -> None:
        try:
            configFile = cast(
                Path | None, cast(Mapping[str, Any], self).get("configFile")
            )

            if configFile and not configFile.is_file():
                self.log.info("Config file not found.")
                configFile = None

            configuration = Configuration.fromConfigFile(configFile)

            options = cast(MutableMapping[str, Any], self)

            if "logFileName" in options:
                configuration = configuration.replace(
                    logFilePath=Path(options["logFileName"])
                )
            elif configuration.logFilePath is not None:
                self.opt_log_file(str(configuration.logFilePath))

            if "logFormat" in options:
                configuration = configuration.replace(
                    logFormat=options["logFormat"]
                )
            elif configuration.logFormat is not None:
                self.opt_log_format(configuration.logFormat.name)

            if "logLevel" in options:
                configuration = configuration.replace(
                    logLevelName=options["logLevel"].name
                )
            elif configuration.logLevelName is not None:
                self.opt_log_level(configuration.logLevelName)

            options["configuration"] = configuration

        except Exception as e:
            exit(ExitCode.usage, str(e))

    def initLogFile(self) -> None:
        try:
            self["logFile"] = openFile(self.get("logFileName", "+"), "a")
        except OSError as e:
            exit(ExitCode.usage, f"Unable to open log file: {e}")

    def selectDefaultLogObserver(self) -> None:
        """
        Set :func:`fileLogObserverFactory` to the default appropriate for the
        chosen log file.
        """
        if "fileLogObserverFactory" not in self:
            logFile = self["logFile"]

            if hasattr(logFile, "isatty") and logFile.isatty():
                self["fileLogObserverFactory"] = textFileLogObserver
                self["logFormat"] = "text"
            else:
                self["fileLogObserverFactory"] = jsonFileLogObserver
                self["logFormat"] = "json"

    def parseOptions(self, options: Sequence[str] | None = None) -> None:
        super().parseOptions(options=options)

        self.initLogFile()
        self.selectDefaultLogObserver()

    def postOptions(self) -> None:
        super().postOptions()

        if self.subCommand is None:
            raise UsageError("No subcommand specified.")

        self.log.info("Running command: {command}...", command=self.subCommand)

        self.subOptions["stderr"] = stderr
        self.subOptions["stdin"] = stdin
        self.subOptions["stdout"] = stdout

        self.initConfig()
