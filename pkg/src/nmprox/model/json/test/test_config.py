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
Tests for :mod:`nmprox.model.json._config`
"""

from hypothesis import given

from nmprox.config import ConfigurationError
from nmprox.ext.trial import TestCase

from ..._config import SolverConfig
from ..._enums import MeritFlavor, StepsizeKind
from ...strategies import solverConfigs
from .._json import jsonDeserialize, jsonSerialize


__all__ = ()


class SolverConfigSerializationTests(TestCase):
    """
    Tests for serialization of :class:`SolverConfig`
    """

    def test_serialize(self) -> None:
        """
        :func:`jsonSerialize` serializes a configuration with snake case keys.
        """
        self.assertEqual(
            jsonSerialize(SolverConfig()),
            dict(
                gamma_min=1e-12,
                gamma_max=1e12,
                gamma_initial=1.0,
                alpha=0.999,
                beta=0.5,
                p=0.2,
                flavor="average",
                memory=5,
                stepsize="spectral",
                epsilon=1e-6,
                max_iters=100_000,
                max_backtracks=200,
                restart_infeasible=False,
                termination_in_loop=True,
            ),
        )


class SolverConfigDeserializationTests(TestCase):
    """
    Tests for deserialization of :class:`SolverConfig`
    """

    @given(solverConfigs())
    def test_deserialize(self, config: SolverConfig) -> None:
        """
        :func:`jsonDeserialize` reads back a serialized configuration.
        """
        self.assertEqual(
            jsonDeserialize(jsonSerialize(config), SolverConfig), config
        )

    def test_deserialize_partial(self) -> None:
        """
        :func:`jsonDeserialize` uses defaults for missing keys.
        """
        config = jsonDeserialize(
            dict(flavor="max", stepsize="plain", max_iters=10), SolverConfig
        )

        self.assertEqual(
            config,
            SolverConfig(
                flavor=MeritFlavor.max,
                stepsize=StepsizeKind.plain,
                maxIterations=10,
            ),
        )

    def test_deserialize_unknownKey(self) -> None:
        """
        :func:`jsonDeserialize` rejects unknown keys.
        """
        self.assertRaises(
            ConfigurationError,
            jsonDeserialize,
            dict(gamma=1.0),
            SolverConfig,
        )

    def test_deserialize_invalidValue(self) -> None:
        """
        :func:`jsonDeserialize` rejects values of the wrong type.
        """
        self.assertRaises(
            ConfigurationError,
            jsonDeserialize,
            dict(flavor="sideways"),
            SolverConfig,
        )

    def test_deserialize_outOfRange(self) -> None:
        """
        :func:`jsonDeserialize` validates the configuration.
        """
        self.assertRaises(
            ConfigurationError, jsonDeserialize, dict(alpha=1.5), SolverConfig
        )

    def test_deserialize_notObject(self) -> None:
        """
        :func:`jsonDeserialize` requires a JSON object.
        """
        self.assertRaises(
            ConfigurationError, jsonDeserialize, [1, 2], SolverConfig
        )
