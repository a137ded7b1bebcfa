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
Composite problems
"""

from math import inf, isfinite, isnan

import numpy as np
from attrs import field, frozen, mutable

from nmprox.model import EvaluationCounts, Point

from ._abc import NonsmoothTerm, SmoothTerm
from ._exceptions import (
    DimensionMismatchError,
    InvalidPointError,
    OracleFaultError,
)


__all__ = ()


@mutable(kw_only=True)
class EvaluationCounters:
    """
    Running tallies of oracle evaluations.
    """

    smooth: int = 0
    gradient: int = 0
    nonsmooth: int = 0
    prox: int = 0

    def snapshot(self) -> EvaluationCounts:
        return EvaluationCounts(
            smooth=self.smooth,
            gradient=self.gradient,
            nonsmooth=self.nonsmooth,
            prox=self.prox,
        )


@frozen(kw_only=True)
class Problem:
    """
    Composite minimization problem ``f + g`` with evaluation counters.

    Counters belong to the problem instance; use :meth:`withFreshCounters` to
    share the terms between independent runs.
    """

    smooth: SmoothTerm
    nonsmooth: NonsmoothTerm
    name: str = "problem"
    counters: EvaluationCounters = field(factory=EvaluationCounters, eq=False)

    def __attrs_post_init__(self) -> None:
        if self.smooth.dim != self.nonsmooth.dim:
            raise DimensionMismatchError(
                f"Smooth term has dimension {self.smooth.dim}, "
                f"nonsmooth term has dimension {self.nonsmooth.dim}"
            )

    @property
    def dim(self) -> int:
        return self.smooth.dim

    def withFreshCounters(self) -> "Problem":
        """
        Return a problem with the same terms and zeroed counters.
        """
        return Problem(
            smooth=self.smooth, nonsmooth=self.nonsmooth, name=self.name
        )

    def counts(self) -> EvaluationCounts:
        return self.counters.snapshot()

    def checkPoint(self, x: Point) -> None:
        """
        Verify that ``x`` is a finite point of the right dimension.

        :raises DimensionMismatchError: if the shape is wrong.
        :raises InvalidPointError: if an entry is not finite.
        """
        if x.shape != (self.dim,):
            raise DimensionMismatchError(
                f"Point has shape {x.shape}, problem {self.name!r} "
                f"expects ({self.dim},)"
            )
        if not np.all(np.isfinite(x)):
            raise InvalidPointError(
                f"Point passed to problem {self.name!r} has non-finite entries"
            )

    def smoothValue(self, x: Point) -> float:
        """
        Evaluate ``f(x)``.
        """
        self.checkPoint(x)
        self.counters.smooth += 1

        value = float(self.smooth.value(x))
        if not isfinite(value):
            raise OracleFaultError(
                f"Smooth term of {self.name!r} returned {value!r}"
            )
        return value

    def nonsmoothValue(self, x: Point) -> float:
        """
        Evaluate ``g(x)``, which is ``math.inf`` off the domain.
        """
        self.checkPoint(x)
        self.counters.nonsmooth += 1

        value = float(self.nonsmooth.value(x))
        if isnan(value) or value == -inf:
            raise OracleFaultError(
                f"Nonsmooth term of {self.name!r} returned {value!r}"
            )
        return value

    def objective(self, x: Point) -> float:
        """
        Evaluate ``f(x) + g(x)``; ``math.inf`` exactly when ``g(x)`` is.
        """
        f = self.smoothValue(x)
        g = self.nonsmoothValue(x)

        if g == inf:
            return inf
        return f + g

    def gradient(self, x: Point) -> Point:
        """
        Evaluate the gradient of ``f`` at ``x``.
        """
        self.checkPoint(x)
        self.counters.gradient += 1

        gradient = np.asarray(self.smooth.gradient(x), dtype=np.float64)
        if gradient.shape != (self.dim,):
            raise OracleFaultError(
                f"Gradient of {self.name!r} has shape {gradient.shape}, "
                f"expected ({self.dim},)"
            )
        if not np.all(np.isfinite(gradient)):
            raise OracleFaultError(
                f"Gradient of {self.name!r} has non-finite entries"
            )
        return gradient

    def prox(self, x: Point, gamma: float) -> Point:
        """
        Evaluate the proximal mapping of ``g`` with stepsize ``gamma`` at
        ``x``.
        """
        self.checkPoint(x)
        self.counters.prox += 1

        z = np.asarray(self.nonsmooth.prox(x, gamma), dtype=np.float64)
        if z.shape != (self.dim,) or not np.all(np.isfinite(z)):
            raise OracleFaultError(
                f"Proximal mapping of {self.name!r} returned an invalid point"
            )
        return z

    def subdifferentialResidual(self, x: Point) -> float | None:
        """
        Distance from ``-grad f(x)`` to the subdifferential of ``g`` at ``x``,
        when the nonsmooth term can compute it.
        Evaluates the gradient without counting it.
        """
        self.checkPoint(x)
        return self.nonsmooth.subdifferentialResidual(
            x, np.asarray(self.smooth.gradient(x), dtype=np.float64)
        )
