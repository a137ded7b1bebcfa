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
Process configuration
"""

from configparser import ConfigParser, NoOptionError, NoSectionError
from os import cpu_count
from pathlib import Path
from typing import Any, ClassVar, TypeVar

from attrs import evolve, field, frozen, mutable
from twisted.logger import Logger

from nmprox.ext.enum import Enum, Names, auto, memberWithName


__all__ = ()


@mutable
class ConfigurationError(Exception):
    """
    Configuration error.
    """

    message: str


class LogFormat(Names):
    """
    Log formats.
    """

    text = auto()
    json = auto()


E = TypeVar("E", bound=Enum)


def defaultParallelism() -> int:
    """
    Number of benchmark worker processes used when none is configured: one
    per CPU.
    """
    return cpu_count() or 1


@frozen(kw_only=True)
class ConfigFileParser:
    """
    Configuration file parser.
    """

    _log: ClassVar[Logger] = Logger()

    path: Path | None
    _configParser: ConfigParser = field(factory=ConfigParser)

    def __attrs_post_init__(self) -> None:
        if self.path is None:
            self._log.info("No configuration file specified.")
            return

        for _okFile in self._configParser.read(str(self.path)):
            self._log.info("Read configuration file: {path}", path=self.path)
            break
        else:
            self._log.error(
                "Unable to read configuration file: {path}",
                path=self.path,
            )

    def valueFromConfig(
        self, section: str, option: str, default: str = ""
    ) -> str:
        try:
            value = self._configParser.get(section, option)
        except (NoSectionError, NoOptionError):
            value = ""

        if value:
            return value
        else:
            return default

    def intFromConfig(
        self, section: str, option: str, default: int, minimum: int = 0
    ) -> int:
        text = self.valueFromConfig(section, option)

        if not text:
            return default

        try:
            value = int(text)
        except ValueError as e:
            raise ConfigurationError(
                f"Invalid integer {text!r} for {section}.{option}"
            ) from e

        if value < minimum:
            raise ConfigurationError(
                f"{section}.{option} must be at least {minimum}, not {value}"
            )

        return value

    def pathFromConfig(
        self, section: str, option: str, root: Path
    ) -> Path | None:
        text = self.valueFromConfig(section, option)

        if not text:
            return None

        if text in ("-", "+"):
            return Path(text)

        path = Path(text)

        if not path.is_absolute():
            path = root.resolve() / path

        return path

    def enumFromConfig(
        self,
        section: str,
        option: str,
        default: E,
    ) -> E:
        name = self.valueFromConfig(section, option)

        if not name:
            return default

        try:
            return memberWithName(type(default), name)
        except KeyError as e:
            raise ConfigurationError(
                f"Invalid option {name!r} for {section}.{option}"
            ) from e


@frozen(kw_only=True)
class Configuration:
    """
    Process configuration: logging and benchmark defaults.
    Solver parameters are not here; they travel with each run specification.
    """

    _log: ClassVar[Logger] = Logger()

    logLevelName: str = "info"
    logFormat: LogFormat | None = None
    logFilePath: Path | None = None
    parallel: int = field(factory=defaultParallelism)
    instances: int = 100
    seed: int = 0

    @classmethod
    def fromConfigFile(cls, configFile: Path | None) -> "Configuration":
        """
        Load the configuration.
        """
        parser = ConfigFileParser(path=configFile)

        if configFile is None:
            root = Path.cwd()
        else:
            root = configFile.parent

        logLevelName = parser.valueFromConfig("Core", "LogLevel", "info")
        cls._log.info("LogLevel: {logLevel}", logLevel=logLevelName)

        logFormat: LogFormat | None
        if parser.valueFromConfig("Core", "LogFormat"):
            logFormat = parser.enumFromConfig(
                "Core", "LogFormat", LogFormat.text
            )
        else:
            logFormat = None
        cls._log.info("LogFormat: {logFormat}", logFormat=logFormat)

        logFilePath = parser.pathFromConfig("Core", "LogFile", root)
        cls._log.info("LogFile: {path}", path=logFilePath)

        parallel = parser.intFromConfig(
            "Bench", "Parallel", defaultParallelism(), minimum=1
        )
        cls._log.info("Parallel: {parallel}", parallel=parallel)

        instances = parser.intFromConfig("Bench", "Instances", 100)
        cls._log.info("Instances: {instances}", instances=instances)

        seed = parser.intFromConfig("Bench", "Seed", 0)
        cls._log.info("Seed: {seed}", seed=seed)

        return cls(
            logLevelName=logLevelName,
            logFormat=logFormat,
            logFilePath=logFilePath,
            parallel=parallel,
            instances=instances,
            seed=seed,
        )

    def replace(self, **kwargs: Any) -> "Configuration":
        """
        Return a new configuration with the same values, except those
        specified by keyword arguments.
        """
        return evolve(self, **kwargs)
