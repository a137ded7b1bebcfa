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
Extensions to :mod:`twisted.trial`
"""

from collections.abc import Sequence

import numpy as np
from hypothesis import HealthCheck, settings
from numpy.typing import ArrayLike
from twisted.trial.unittest import SynchronousTestCase as SuperTestCase


__all__ = ("TestCase",)


settings.register_profile(
    "ci",
    deadline=None,
    suppress_health_check=[
        HealthCheck.data_too_large,
        HealthCheck.too_slow,
    ],
)
settings.load_profile("ci")


class TestCase(SuperTestCase):
    """
    A unit test.
    """

    def assertArrayEqual(self, first: ArrayLike, second: ArrayLike) -> None:
        """
        Assert that two arrays have the same shape and bit-identical entries.
        """
        a = np.asarray(first)
        b = np.asarray(second)

        self.assertEqual(a.shape, b.shape)
        if not np.array_equal(a, b, equal_nan=True):
            self.fail(f"Arrays differ:\n{a!r}\n!=\n{b!r}")

    def assertArrayClose(
        self,
        first: ArrayLike,
        second: ArrayLike,
        atol: float = 1e-12,
        rtol: float = 0.0,
    ) -> None:
        """
        Assert that two arrays have the same shape and entries within the
        given tolerances.
        """
        a = np.asarray(first, dtype=np.float64)
        b = np.asarray(second, dtype=np.float64)

        self.assertEqual(a.shape, b.shape)
        if not np.allclose(a, b, atol=atol, rtol=rtol):
            worst = float(np.max(np.abs(a - b))) if a.size else 0.0
            self.fail(
                f"Arrays differ by up to {worst!r} (atol={atol}, rtol={rtol})"
                f":\n{a!r}\n!=\n{b!r}"
            )

    def assertNonDecreasing(self, values: Sequence[float]) -> None:
        """
        Assert that a sequence of numbers never decreases.
        """
        for index, (a, b) in enumerate(zip(values, values[1:])):
            if b < a:
                self.fail(f"Sequence decreases at index {index + 1}: {a} > {b}")

    def assertNonIncreasing(self, values: Sequence[float]) -> None:
        """
        Assert that a sequence of numbers never increases.
        """
        for index, (a, b) in enumerate(zip(values, values[1:])):
            if b > a:
                self.fail(f"Sequence increases at index {index + 1}: {a} < {b}")
