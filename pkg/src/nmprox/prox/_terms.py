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
Nonsmooth terms with closed-form proximal mappings
"""

from math import inf

import numpy as np
from attrs import field, frozen

from nmprox.model import Point
from nmprox.problem import NonsmoothTerm, ProxLayoutError

from ._prox import (
    columnsOf,
    proxDictLearn,
    proxL0,
    proxL1,
    proxUnitSphereColumns,
    splitDictLearn,
    subdifferentialResidualL0,
    subdifferentialResidualL1,
    subdifferentialResidualSphereColumns,
)


__all__ = ()


# Column norms within this distance of one count as feasible.
SPHERE_TOLERANCE = 1e-10


def _positive(instance: object, attribute: object, value: int) -> None:
    if value <= 0:
        raise ProxLayoutError(f"Dimension must be positive, got {value}")


def _nonNegative(instance: object, attribute: object, value: float) -> None:
    if not value >= 0.0:
        raise ValueError(f"Regularization weight must be >= 0, got {value}")


@frozen(kw_only=True)
class ZeroTerm(NonsmoothTerm):
    """
    The zero function; its proximal mapping is the identity.
    """

    size: int = field(validator=_positive)

    @property
    def dim(self) -> int:
        return self.size

    def value(self, x: Point) -> float:
        return 0.0

    def prox(self, x: Point, gamma: float) -> Point:
        return x.copy()

    def subdifferentialResidual(self, x: Point, v: Point) -> float:
        return float(np.linalg.norm(v))


@frozen(kw_only=True)
class L1Norm(NonsmoothTerm):
    """
    ``lam * ||x||_1``.
    """

    size: int = field(validator=_positive)
    lam: float = field(converter=float, validator=_nonNegative)

    @property
    def dim(self) -> int:
        return self.size

    def value(self, x: Point) -> float:
        return self.lam * float(np.sum(np.abs(x)))

    def prox(self, x: Point, gamma: float) -> Point:
        return proxL1(x, gamma, self.lam)

    def subdifferentialResidual(self, x: Point, v: Point) -> float:
        return subdifferentialResidualL1(x, v, self.lam)


@frozen(kw_only=True)
class L0Norm(NonsmoothTerm):
    """
    ``lam * ||x||_0``, the number of nonzero entries scaled by ``lam``.
    """

    size: int = field(validator=_positive)
    lam: float = field(converter=float, validator=_nonNegative)

    @property
    def dim(self) -> int:
        return self.size

    def value(self, x: Point) -> float:
        return self.lam * float(np.count_nonzero(x))

    def prox(self, x: Point, gamma: float) -> Point:
        return proxL0(x, gamma, self.lam)

    def subdifferentialResidual(self, x: Point, v: Point) -> float:
        return subdifferentialResidualL0(x, v)


def onUnitSphereColumns(x: Point, rows: int) -> bool:
    norms = np.linalg.norm(columnsOf(x, rows), axis=0)
    return bool(np.all(np.abs(norms - 1.0) <= SPHERE_TOLERANCE))


@frozen(kw_only=True)
class UnitSphereColumns(NonsmoothTerm):
    """
    Indicator of ``rows x columns`` matrices, packed column-major, whose
    columns all have unit Euclidean norm.
    """

    rows: int = field(validator=_positive)
    columns: int = field(validator=_positive)

    @property
    def dim(self) -> int:
        return self.rows * self.columns

    def value(self, x: Point) -> float:
        return 0.0 if onUnitSphereColumns(x, self.rows) else inf

    def prox(self, x: Point, gamma: float) -> Point:
        return proxUnitSphereColumns(x, gamma, self.rows)

    def subdifferentialResidual(self, x: Point, v: Point) -> float:
        return subdifferentialResidualSphereColumns(x, v, self.rows)


@frozen(kw_only=True)
class DictLearnRegularizer(NonsmoothTerm):
    """
    Regularizer of sparse dictionary learning over points packing a
    ``rows x atoms`` dictionary followed by ``atoms x signals`` coefficients:
    unit-norm dictionary columns plus ``lam`` times the number of nonzero
    coefficients.
    """

    rows: int = field(validator=_positive)
    atoms: int = field(validator=_positive)
    signals: int = field(validator=_positive)
    lam: float = field(converter=float, validator=_nonNegative)

    @property
    def dim(self) -> int:
        return self.atoms * (self.rows + self.signals)

    def split(self, x: Point) -> tuple[Point, Point]:
        """
        Split ``x`` into its dictionary and coefficient blocks.
        """
        return splitDictLearn(x, self.rows, self.atoms, self.signals)

    def value(self, x: Point) -> float:
        dictionary, coefficients = self.split(x)
        if not onUnitSphereColumns(dictionary, self.rows):
            return inf
        return self.lam * float(np.count_nonzero(coefficients))

    def prox(self, x: Point, gamma: float) -> Point:
        return proxDictLearn(
            x, gamma, self.lam, self.rows, self.atoms, self.signals
        )

    def subdifferentialResidual(self, x: Point, v: Point) -> float:
        dictionary, coefficients = self.split(x)
        vDictionary, vCoefficients = self.split(v)
        return float(
            np.hypot(
                subdifferentialResidualSphereColumns(
                    dictionary, vDictionary, self.rows
                ),
                subdifferentialResidualL0(coefficients, vCoefficients),
            )
        )
