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
Composite problem term abstract base classes.
"""

from abc import ABC, abstractmethod

from nmprox.model import Point


__all__ = ()


class SmoothTerm(ABC):
    """
    Continuously differentiable term ``f``, real-valued everywhere.
    """

    @property
    @abstractmethod
    def dim(self) -> int:
        """
        Dimension of the points this term accepts.
        """

    @abstractmethod
    def value(self, x: Point) -> float:
        """
        Evaluate ``f(x)``.
        """

    @abstractmethod
    def gradient(self, x: Point) -> Point:
        """
        Evaluate the gradient of ``f`` at ``x``.
        """


class NonsmoothTerm(ABC):
    """
    Proper, lower semicontinuous, prox-bounded term ``g`` with values in the
    extended reals (``math.inf`` off its domain).
    """

    @property
    @abstractmethod
    def dim(self) -> int:
        """
        Dimension of the points this term accepts.
        """

    @abstractmethod
    def value(self, x: Point) -> float:
        """
        Evaluate ``g(x)``; ``math.inf`` outside the domain.
        """

    @abstractmethod
    def prox(self, x: Point, gamma: float) -> Point:
        """
        Return a point of the proximal mapping of ``g`` with stepsize
        ``gamma`` at ``x``.
        The result always lies in the domain of ``g``.
        """

    def subdifferentialResidual(self, x: Point, v: Point) -> float | None:
        """
        Distance from ``-v`` to the subdifferential of ``g`` at ``x``, or
        :obj:`None` if this term cannot compute it.
        """
        return None
