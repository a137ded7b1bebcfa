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
Tests for :mod:`nmprox.solver._merit`
"""

from math import inf

from hypothesis import given
from hypothesis.strategies import floats, lists

from nmprox.ext.trial import TestCase
from nmprox.model import MeritFlavor, SolverConfig
from nmprox.problem import InfeasibleStartError

from .._merit import MeritState, acceptable


__all__ = ()


class AcceptableTests(TestCase):
    """
    Tests for :func:`acceptable`
    """

    def test_accept(self) -> None:
        """
        A trial value below the threshold is accepted.
        """
        self.assertTrue(acceptable(8.9, 10.0, 1.0, 0.5, 4.0))

    def test_reject(self) -> None:
        """
        A trial value above the threshold is rejected.
        """
        self.assertFalse(acceptable(9.1, 10.0, 1.0, 0.5, 4.0))

    def test_equal(self) -> None:
        """
        A trial value at the threshold is accepted.
        """
        self.assertTrue(acceptable(9.0, 10.0, 1.0, 0.5, 4.0))

    def test_infinite(self) -> None:
        """
        An infinite trial value is rejected.
        """
        self.assertFalse(acceptable(inf, 10.0, 1.0, 0.5, 0.0))


class MeritStateTests(TestCase):
    """
    Tests for :class:`MeritState`
    """

    def test_initial(self) -> None:
        """
        The initial merit is the initial objective value.
        """
        for flavor in MeritFlavor:
            state = MeritState.initial(10.0, SolverConfig(flavor=flavor))
            self.assertEqual(state.value, 10.0)

    def test_initial_max(self) -> None:
        """
        The max flavor window starts with the initial objective value.
        """
        config = SolverConfig(flavor=MeritFlavor.max, memory=5)
        state = MeritState.initial(0.0, config)

        self.assertEqual(list(state.history), [0.0])
        self.assertEqual(state.value, 0.0)

    def test_initial_infeasible(self) -> None:
        """
        An infinite initial objective value is an infeasible start.
        """
        self.assertRaises(
            InfeasibleStartError, MeritState.initial, inf, SolverConfig()
        )

    def test_update_average(self) -> None:
        """
        The average flavor mixes in the new value with weight ``p``.
        """
        config = SolverConfig(flavor=MeritFlavor.average, p=0.2)
        state = MeritState.initial(10.0, config)

        self.assertAlmostEqual(state.update(4.0), 8.8, places=14)

    def test_update_monotone(self) -> None:
        """
        The monotone flavor replaces the merit with the new value.
        """
        config = SolverConfig(flavor=MeritFlavor.monotone, p=0.2)
        state = MeritState.initial(10.0, config)

        self.assertEqual(state.update(4.0), 4.0)

    def test_update_max(self) -> None:
        """
        The max flavor merit is the largest value in the window.
        """
        config = SolverConfig(flavor=MeritFlavor.max, memory=5)
        state = MeritState.initial(3.0, config)
        state.update(5.0)
        state.update(2.0)

        self.assertEqual(state.update(4.0), 5.0)

    @given(
        lists(floats(min_value=-1e6, max_value=1e6), min_size=1, max_size=30),
        floats(min_value=-1e6, max_value=1e6),
    )
    def test_update_max_window(self, values: list[float], phi0: float) -> None:
        """
        The max flavor merit equals the maximum over the last ``memory + 1``
        accepted values.
        """
        config = SolverConfig(flavor=MeritFlavor.max, memory=3)
        state = MeritState.initial(phi0, config)
        accepted = [phi0]

        for value in values:
            accepted.append(value)
            self.assertEqual(state.update(value), max(accepted[-4:]))

    @given(
        lists(floats(min_value=-1e6, max_value=1e6), min_size=1, max_size=30),
        floats(min_value=-1e6, max_value=1e6),
    )
    def test_maxWithoutMemory(self, values: list[float], phi0: float) -> None:
        """
        The max flavor without memory tracks the latest value.
        """
        config = SolverConfig(flavor=MeritFlavor.max, memory=0)
        state = MeritState.initial(phi0, config)

        for value in values:
            self.assertEqual(state.update(value), value)
