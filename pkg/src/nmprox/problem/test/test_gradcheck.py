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
Tests for :mod:`nmprox.problem._gradcheck`
"""

import numpy as np
from hypothesis import given, settings

from nmprox.ext.trial import TestCase
from nmprox.model import asPoint
from nmprox.model.strategies import seeds

from .._exceptions import OracleFaultError, ProblemError
from .._gradcheck import checkGradient
from .._smooth import LeastSquares, Quadratic
from .doubles import Broken, Mismatched, Sine


__all__ = ()


class CheckGradientTests(TestCase):
    """
    Tests for :func:`checkGradient`
    """

    def test_quadratic(self) -> None:
        """
        Central differences of a quadratic agree with its gradient up to
        roundoff.
        """
        smooth = Quadratic.distance([0.0, 0.0])
        self.assertLess(checkGradient(smooth, asPoint([1.0, 2.0]), 1e-6), 1e-6)

    def test_quadratic_scaled(self) -> None:
        """
        A scaled quadratic passes the check at seeded random points.
        """
        for seed in range(100):
            rng = np.random.default_rng(seed)
            smooth = Quadratic(
                center=rng.uniform(-5.0, 5.0, 5),
                scale=rng.uniform(0.1, 5.0, 5),
            )
            x = rng.uniform(-5.0, 5.0, 5)

            self.assertLess(checkGradient(smooth, x, 1e-6), 1e-5)

    def test_sine(self) -> None:
        """
        Central differences of the sine at zero agree with its gradient.
        """
        self.assertLess(checkGradient(Sine(), asPoint([0.0]), 1e-6), 1e-8)

    def test_wrongGradient(self) -> None:
        """
        A wrong gradient is detected.
        """
        # Gradient 3 against a central difference of 6 at x = 3.
        smooth = Mismatched(
            values=Quadratic(center=[0.0], scale=[2.0]),
            gradients=Quadratic.distance([0.0]),
        )
        self.assertAlmostEqual(
            checkGradient(smooth, asPoint([3.0])), 1.0, places=5
        )

    @settings(max_examples=100)
    @given(seeds())
    def test_leastSquares(self, seed: int) -> None:
        """
        The least squares gradient passes the check at random points.
        """
        rng = np.random.default_rng(seed)
        smooth = LeastSquares(
            matrix=rng.standard_normal((6, 4)), target=rng.standard_normal(6)
        )
        x = rng.uniform(-10.0, 10.0, 4)

        self.assertLessEqual(checkGradient(smooth, x, 1e-6), 1e-5)

    def test_badStep(self) -> None:
        """
        The difference step must be positive.
        """
        self.assertRaises(
            ProblemError, checkGradient, Sine(), asPoint([0.0]), 0.0
        )

    def test_oracleFault(self) -> None:
        """
        Non-finite gradients are reported.
        """
        self.assertRaises(
            OracleFaultError, checkGradient, Broken(), asPoint([0.0])
        )

