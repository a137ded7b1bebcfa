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
Tests for :mod:`nmprox.model._config`
"""

from typing import Any

from hypothesis import given
from hypothesis.strategies import floats

from nmprox.config import ConfigurationError
from nmprox.ext.trial import TestCase

from .._config import SolverConfig
from .._enums import MeritFlavor, StepsizeKind
from ..strategies import solverConfigs


__all__ = ()


class SolverConfigTests(TestCase):
    """
    Tests for :class:`SolverConfig`
    """

    def test_defaults(self) -> None:
        """
        :class:`SolverConfig` defaults to the spectral stepsize with the
        average merit.
        """
        config = SolverConfig()

        self.assertEqual(config.gammaMin, 1e-12)
        self.assertEqual(config.gammaMax, 1e12)
        self.assertEqual(config.alpha, 0.999)
        self.assertEqual(config.beta, 0.5)
        self.assertIs(config.flavor, MeritFlavor.average)
        self.assertIs(config.stepsize, StepsizeKind.spectral)
        self.assertFalse(config.restartInfeasible)
        self.assertTrue(config.terminationInLoop)

    def assertInvalid(self, **kwargs: Any) -> None:
        self.assertRaises(ConfigurationError, SolverConfig, **kwargs)

    def test_invalid_stepsizeBounds(self) -> None:
        """
        Stepsize bounds must be positive, finite and ordered.
        """
        self.assertInvalid(gammaMin=0.0)
        self.assertInvalid(gammaMin=2.0, gammaMax=1.0)
        self.assertInvalid(gammaMax=float("inf"))
        self.assertInvalid(gammaInitial=0.0)

    def test_invalid_alpha(self) -> None:
        """
        ``alpha`` must lie strictly between zero and one.
        """
        self.assertInvalid(alpha=0.0)
        self.assertInvalid(alpha=1.0)

    def test_invalid_beta(self) -> None:
        """
        ``beta`` must lie strictly between zero and one.
        """
        self.assertInvalid(beta=0.0)
        self.assertInvalid(beta=1.0)

    def test_invalid_p(self) -> None:
        """
        ``p`` must lie in ``(0, 1]``.
        """
        self.assertInvalid(p=0.0)
        self.assertInvalid(p=1.5)
        SolverConfig(p=1.0)

    def test_invalid_limits(self) -> None:
        """
        Iteration and backtracking limits and the tolerance are checked.
        """
        self.assertInvalid(maxIterations=0)
        self.assertInvalid(maxBacktracks=-1)
        self.assertInvalid(epsilon=0.0)
        self.assertInvalid(memory=-1)

    def test_meritWeight_monotone(self) -> None:
        """
        The monotone flavor always averages with weight one.
        """
        config = SolverConfig(flavor=MeritFlavor.monotone, p=0.3)
        self.assertEqual(config.meritWeight, 1.0)

    def test_meritWeight_average(self) -> None:
        """
        The average flavor uses ``p``.
        """
        config = SolverConfig(flavor=MeritFlavor.average, p=0.3)
        self.assertEqual(config.meritWeight, 0.3)

    def test_variantName(self) -> None:
        """
        :attr:`SolverConfig.variantName` joins the stepsize kind and flavor.
        """
        config = SolverConfig(
            stepsize=StepsizeKind.plain, flavor=MeritFlavor.monotone
        )
        self.assertEqual(config.variantName, "plain_monotone")

    @given(solverConfigs(), floats(allow_nan=False))
    def test_clampStepsize(self, config: SolverConfig, gamma: float) -> None:
        """
        :meth:`SolverConfig.clampStepsize` lands in the stepsize range and is
        the identity inside it.
        """
        clamped = config.clampStepsize(gamma)

        self.assertGreaterEqual(clamped, config.gammaMin)
        self.assertLessEqual(clamped, config.gammaMax)
        if config.gammaMin <= gamma <= config.gammaMax:
            self.assertEqual(clamped, gamma)

    @given(solverConfigs())
    def test_replace(self, config: SolverConfig) -> None:
        """
        :meth:`SolverConfig.replace` changes only the given values.
        """
        replaced = config.replace(epsilon=1e-3)

        self.assertEqual(replaced.epsilon, 1e-3)
        self.assertEqual(replaced.replace(epsilon=config.epsilon), config)

    @given(solverConfigs())
    def test_replace_invalid(self, config: SolverConfig) -> None:
        """
        :meth:`SolverConfig.replace` validates the new values.
        """
        self.assertRaises(ConfigurationError, config.replace, beta=2.0)
