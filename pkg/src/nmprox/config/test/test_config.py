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
Tests for :mod:`nmprox.config._config`.
"""

from pathlib import Path
from string import ascii_letters

from hypothesis import assume, given
from hypothesis.strategies import integers, sampled_from, text

from nmprox.ext.enum import Names, auto
from nmprox.ext.trial import TestCase

from .. import _config
from .._config import (
    ConfigFileParser,
    Configuration,
    ConfigurationError,
    LogFormat,
    defaultParallelism,
)


__all__ = ()


def writeConfig(path: Path, section: str, option: str, value: str) -> None:
    value = value.replace("%", "%%")
    path.write_text(f"[{section}]\n{option} = {value}\n")


class Things(Names):
    """
    Some things.
    """

    cheese = auto()
    butter = auto()
    wheels = auto()


class ConfigFileParserTests(TestCase):
    """
    Tests for :class:`ConfigFileParser`
    """

    def test_init_path(self) -> None:
        """
        Init path is kept.
        """
        configFilePath = Path(self.mktemp())
        configFilePath.write_text("")

        parser = ConfigFileParser(path=configFilePath)

        self.assertEqual(parser.path, configFilePath)

    def test_init_path_none(self) -> None:
        """
        Init path may be None.
        """
        parser = ConfigFileParser(path=None)

        self.assertIsNone(parser.path)

    def test_init_path_missing(self) -> None:
        """
        Init with missing path is OK.
        """
        configFilePath = Path(self.mktemp())
        assert not configFilePath.exists()

        parser = ConfigFileParser(path=configFilePath)

        self.assertEqual(parser.path, configFilePath)

    @given(
        text(alphabet=ascii_letters, min_size=1),  # value
        text(alphabet=ascii_letters, min_size=1),  # section
        text(alphabet=ascii_letters, min_size=1),  # option
        text(),  # default
    )
    def test_valueFromConfig(
        self, value: str, section: str, option: str, default: str
    ) -> None:
        """
        ConfigFileParser.valueFromConfig() reads a value from the config file.
        """
        configFilePath = Path(self.mktemp())
        writeConfig(configFilePath, section, option, value)

        parser = ConfigFileParser(path=configFilePath)
        self.assertEqual(
            parser.valueFromConfig(section, option, default), value
        )

    @given(
        text(alphabet=ascii_letters, min_size=1),  # value
        text(alphabet=ascii_letters, min_size=1),  # section
        text(alphabet=ascii_letters, min_size=1),  # option
        text(alphabet=ascii_letters, min_size=1),  # otherSection
        text(alphabet=ascii_letters, min_size=1),  # otherOption
        text(),  # default
    )
    def test_valueFromConfig_notFound(
        self,
        value: str,
        section: str,
        option: str,
        otherSection: str,
        otherOption: str,
        default: str,
    ) -> None:
        """
        ConfigFileParser.valueFromConfig() returns the default value when it
        can't find a value in the config file.
        """
        assume(section != "DEFAULT")
        assume((section, option.lower()) != (otherSection, otherOption.lower()))

        configFilePath = Path(self.mktemp())
        writeConfig(configFilePath, section, option, value)

        parser = ConfigFileParser(path=configFilePath)
        self.assertEqual(
            parser.valueFromConfig(otherSection, otherOption, default),
            default,
        )

    @given(integers(min_value=0, max_value=10_000))
    def test_intFromConfig(self, value: int) -> None:
        """
        ConfigFileParser.intFromConfig() reads an integer.
        """
        configFilePath = Path(self.mktemp())
        writeConfig(configFilePath, "Bench", "Instances", str(value))

        parser = ConfigFileParser(path=configFilePath)
        self.assertEqual(parser.intFromConfig("Bench", "Instances", 1), value)

    def test_intFromConfig_default(self) -> None:
        """
        ConfigFileParser.intFromConfig() returns the default for a missing
        value.
        """
        parser = ConfigFileParser(path=None)
        self.assertEqual(parser.intFromConfig("Bench", "Instances", 9), 9)

    def test_intFromConfig_invalid(self) -> None:
        """
        ConfigFileParser.intFromConfig() raises ConfigurationError for text
        that is not an integer.
        """
        configFilePath = Path(self.mktemp())
        writeConfig(configFilePath, "Bench", "Instances", "many")

        parser = ConfigFileParser(path=configFilePath)
        self.assertRaises(
            ConfigurationError, parser.intFromConfig, "Bench", "Instances", 1
        )

    def test_intFromConfig_minimum(self) -> None:
        """
        ConfigFileParser.intFromConfig() raises ConfigurationError for values
        below the minimum.
        """
        configFilePath = Path(self.mktemp())
        writeConfig(configFilePath, "Bench", "Parallel", "0")

        parser = ConfigFileParser(path=configFilePath)
        self.assertRaises(
            ConfigurationError,
            parser.intFromConfig,
            "Bench",
            "Parallel",
            1,
            minimum=1,
        )

    def test_pathFromConfig_relative(self) -> None:
        """
        ConfigFileParser.pathFromConfig() reads a path relative to the given
        root.
        """
        configFilePath = Path(self.mktemp())
        writeConfig(configFilePath, "Core", "LogFile", "logs/nmprox.log")
        rootPath = Path(self.mktemp())

        parser = ConfigFileParser(path=configFilePath)
        self.assertEqual(
            parser.pathFromConfig("Core", "LogFile", rootPath),
            rootPath.resolve() / "logs" / "nmprox.log",
        )

    def test_pathFromConfig_absolute(self) -> None:
        """
        ConfigFileParser.pathFromConfig() reads an absolute path as is.
        """
        valuePath = Path(self.mktemp()).resolve()
        configFilePath = Path(self.mktemp())
        writeConfig(configFilePath, "Core", "LogFile", str(valuePath))

        parser = ConfigFileParser(path=configFilePath)
        self.assertEqual(
            parser.pathFromConfig("Core", "LogFile", Path(self.mktemp())),
            valuePath,
        )

    def test_pathFromConfig_standardStreams(self) -> None:
        """
        ConfigFileParser.pathFromConfig() keeps "-" and "+" unresolved.
        """
        for name in ("-", "+"):
            configFilePath = Path(self.mktemp())
            writeConfig(configFilePath, "Core", "LogFile", name)

            parser = ConfigFileParser(path=configFilePath)
            self.assertEqual(
                parser.pathFromConfig("Core", "LogFile", Path.cwd()),
                Path(name),
            )

    def test_pathFromConfig_notFound(self) -> None:
        """
        ConfigFileParser.pathFromConfig() returns None for a missing value.
        """
        parser = ConfigFileParser(path=None)
        self.assertIsNone(parser.pathFromConfig("Core", "LogFile", Path.cwd()))

    @given(sampled_from(Things))
    def test_enumFromConfig(self, value: Things) -> None:
        """
        ConfigFileParser.enumFromConfig() reads an enum member by name.
        """
        configFilePath = Path(self.mktemp())
        writeConfig(configFilePath, "Things", "Thing", value.name)

        parser = ConfigFileParser(path=configFilePath)
        self.assertIs(
            parser.enumFromConfig("Things", "Thing", Things.cheese), value
        )

    def test_enumFromConfig_default(self) -> None:
        """
        ConfigFileParser.enumFromConfig() returns the default for a missing
        value.
        """
        parser = ConfigFileParser(path=None)
        self.assertIs(
            parser.enumFromConfig("Things", "Thing", Things.butter),
            Things.butter,
        )

    def test_enumFromConfig_invalid(self) -> None:
        """
        ConfigFileParser.enumFromConfig() raises ConfigurationError for
        unknown names.
        """
        configFilePath = Path(self.mktemp())
        writeConfig(configFilePath, "Things", "Thing", "dogs")

        parser = ConfigFileParser(path=configFilePath)
        self.assertRaises(
            ConfigurationError,
            parser.enumFromConfig,
            "Things",
            "Thing",
            Things.cheese,
        )


class ConfigurationTests(TestCase):
    """
    Tests for :class:`Configuration`
    """

    def test_defaults(self) -> None:
        """
        Without a configuration file, defaults are used.
        """
        configuration = Configuration.fromConfigFile(None)

        self.assertEqual(configuration, Configuration())
        self.assertEqual(configuration.logLevelName, "info")
        self.assertIsNone(configuration.logFormat)
        self.assertIsNone(configuration.logFilePath)
        self.assertEqual(configuration.parallel, defaultParallelism())
        self.assertEqual(configuration.instances, 100)
        self.assertEqual(configuration.seed, 0)

    def test_parallelismDefault(self) -> None:
        """
        Benchmark parallelism defaults to one worker per CPU, or one worker
        when the CPU count is unknown.
        """
        self.patch(_config, "cpu_count", lambda: 6)
        self.assertEqual(Configuration().parallel, 6)
        self.assertEqual(Configuration.fromConfigFile(None).parallel, 6)

        self.patch(_config, "cpu_count", lambda: None)
        self.assertEqual(Configuration().parallel, 1)

    def test_sample(self) -> None:
        """
        Values are read from the configuration file; relative paths are
        relative to its directory.
        """
        directory = Path(self.mktemp())
        directory.mkdir()
        configFilePath = directory / "nmprox.conf"
        configFilePath.write_text(
            "[Core]\n"
            "LogLevel = debug\n"
            "LogFormat = text\n"
            "LogFile = nmprox.log\n"
            "\n"
            "[Bench]\n"
            "Parallel = 4\n"
            "Instances = 10\n"
            "Seed = 3\n"
        )

        configuration = Configuration.fromConfigFile(configFilePath)

        self.assertEqual(
            configuration,
            Configuration(
                logLevelName="debug",
                logFormat=LogFormat.text,
                logFilePath=directory.resolve() / "nmprox.log",
                parallel=4,
                instances=10,
                seed=3,
            ),
        )

    def test_invalid(self) -> None:
        """
        Invalid values raise ConfigurationError.
        """
        configFilePath = Path(self.mktemp())
        writeConfig(configFilePath, "Bench", "Parallel", "0")

        self.assertRaises(
            ConfigurationError, Configuration.fromConfigFile, configFilePath
        )

    def test_replace(self) -> None:
        """
        Configuration.replace() changes only the given values.
        """
        configuration = Configuration().replace(seed=5)

        self.assertEqual(configuration.seed, 5)
        self.assertEqual(configuration.instances, 100)
