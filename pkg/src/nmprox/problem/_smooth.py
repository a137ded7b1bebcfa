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
Smooth terms with analytic gradients
"""

import numpy as np
from attrs import field, frozen

from nmprox.model import Point, asMatrix, asPoint

from ._abc import SmoothTerm
from ._exceptions import DimensionMismatchError


__all__ = ()


@frozen(kw_only=True, eq=False)
class Quadratic(SmoothTerm):
    """
    Separable quadratic ``f(x) = 1/2 sum_i scale_i (x_i - center_i)^2``.
    With unit scale this is half the squared distance to ``center``; with zero
    scale it is the zero function.
    """

    center: Point = field(converter=asPoint)
    scale: Point = field(converter=asPoint)

    @classmethod
    def distance(cls, center: Point) -> "Quadratic":
        """
        Half the squared distance to ``center``.
        """
        center = asPoint(center)
        return cls(center=center, scale=np.ones_like(center))

    @classmethod
    def zero(cls, dim: int) -> "Quadratic":
        """
        The zero function on points of dimension ``dim``.
        """
        return cls(center=np.zeros(dim), scale=np.zeros(dim))

    def __attrs_post_init__(self) -> None:
        if self.center.shape != self.scale.shape:
            raise DimensionMismatchError(
                f"Center has shape {self.center.shape}, "
                f"scale has shape {self.scale.shape}"
            )

    @property
    def dim(self) -> int:
        return int(self.center.size)

    def value(self, x: Point) -> float:
        d = x - self.center
        return 0.5 * float(np.dot(self.scale * d, d))

    def gradient(self, x: Point) -> Point:
        return self.scale * (x - self.center)


@frozen(kw_only=True, eq=False)
class LeastSquares(SmoothTerm):
    """
    Linear least squares ``f(x) = 1/2 ||A x - b||^2``.
    """

    matrix: Point = field(converter=asMatrix)
    target: Point = field(converter=asPoint)

    def __attrs_post_init__(self) -> None:
        if self.matrix.ndim != 2 or self.matrix.shape[0] != self.target.size:
            raise DimensionMismatchError(
                f"Matrix of shape {self.matrix.shape} does not match "
                f"target of size {self.target.size}"
            )

    @property
    def dim(self) -> int:
        return int(self.matrix.shape[1])

    def residual(self, x: Point) -> Point:
        return self.matrix @ x - self.target

    def value(self, x: Point) -> float:
        r = self.residual(x)
        return 0.5 * float(np.dot(r, r))

    def gradient(self, x: Point) -> Point:
        return self.matrix.T @ self.residual(x)
