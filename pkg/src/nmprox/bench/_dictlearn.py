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
Sparse dictionary learning problems
"""

import numpy as np
from attrs import field, frozen

from nmprox.model import Point, asMatrix
from nmprox.problem import Problem, SmoothTerm
from nmprox.prox import (
    DictLearnRegularizer,
    columnsOf,
    packColumns,
    splitDictLearn,
)

from ._instance import DictLearnInstance


__all__ = ()


@frozen(kw_only=True, eq=False)
class DictLearnLoss(SmoothTerm):
    """
    Factorization loss ``f(D, C) = 1/2 ||Y - D C||_F^2`` over points packing
    the dictionary ``D`` (``rows x atoms``) followed by the coefficients ``C``
    (``atoms x signals``), both column-major.
    """

    target: Point = field(converter=asMatrix)
    atoms: int

    @property
    def rows(self) -> int:
        return int(self.target.shape[0])

    @property
    def signals(self) -> int:
        return int(self.target.shape[1])

    @property
    def dim(self) -> int:
        return self.atoms * (self.rows + self.signals)

    def factors(self, x: Point) -> tuple[Point, Point]:
        """
        Unpack ``x`` into the dictionary and coefficient matrices.
        """
        dictionary, coefficients = splitDictLearn(
            x, self.rows, self.atoms, self.signals
        )
        return columnsOf(dictionary, self.rows), columnsOf(
            coefficients, self.atoms
        )

    def residual(self, x: Point) -> tuple[Point, Point, Point]:
        dictionary, coefficients = self.factors(x)
        return dictionary, coefficients, dictionary @ coefficients - self.target

    def value(self, x: Point) -> float:
        _, _, residual = self.residual(x)
        return 0.5 * float(np.sum(residual * residual))

    def gradient(self, x: Point) -> Point:
        dictionary, coefficients, residual = self.residual(x)
        return np.concatenate(
            (
                packColumns(residual @ coefficients.T),
                packColumns(dictionary.T @ residual),
            )
        )


def dictLearnProblem(instance: DictLearnInstance) -> Problem:
    """
    The dictionary learning problem of ``instance``: the factorization loss
    plus unit-norm dictionary columns and ``lam`` times the number of nonzero
    coefficients.
    """
    spec = instance.spec
    return Problem(
        smooth=DictLearnLoss(target=instance.target, atoms=spec.atoms),
        nonsmooth=DictLearnRegularizer(
            rows=spec.rows,
            atoms=spec.atoms,
            signals=spec.signals,
            lam=spec.lam,
        ),
        name=f"dictlearn-{spec.seed}",
    )
