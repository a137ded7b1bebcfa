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
Planted sparse dictionary learning instances
"""

import numpy as np
from attrs import evolve, field, frozen
from twisted.logger import Logger

from nmprox.config import ConfigurationError
from nmprox.model import Point
from nmprox.prox import packColumns, proxUnitSphereColumns


__all__ = ()


log = Logger()


def normalizedColumns(matrix: Point) -> Point:
    """
    Scale each column of ``matrix`` to unit Euclidean norm.
    """
    rows = matrix.shape[0]
    return proxUnitSphereColumns(packColumns(matrix), 1.0, rows).reshape(
        matrix.shape, order="F"
    )


@frozen(kw_only=True)
class InstanceSpec:
    """
    Dimensions and seed of a dictionary learning instance: ``rows`` (``n``)
    samples per signal, ``atoms`` (``l``) dictionary columns, ``signals``
    (``m``) data columns, ``nonzeros`` (``N``) planted coefficients per
    signal, and the regularization weight ``lam``.
    The matrices are regenerated from the seed, never stored.
    """

    rows: int = 10
    atoms: int = 20
    signals: int = 30
    nonzeros: int = 3
    lam: float = 1e-2
    seed: int = 0

    def __attrs_post_init__(self) -> None:
        for name in ("rows", "atoms", "signals", "nonzeros"):
            value = getattr(self, name)
            if value <= 0:
                raise ConfigurationError(
                    f"Instance {name} must be positive, not {value}"
                )
        if self.nonzeros > self.atoms:
            raise ConfigurationError(
                f"Cannot plant {self.nonzeros} nonzeros per signal "
                f"with {self.atoms} atoms"
            )
        if not self.lam >= 0:
            raise ConfigurationError(
                f"Regularization weight must be nonnegative, not {self.lam}"
            )

    def withSeed(self, seed: int) -> "InstanceSpec":
        return evolve(self, seed=seed)

    def generate(self) -> "DictLearnInstance":
        return generateInstance(
            self.rows,
            self.atoms,
            self.signals,
            self.nonzeros,
            self.lam,
            self.seed,
        )


@frozen(kw_only=True, eq=False)
class DictLearnInstance:
    """
    Dictionary learning instance with a planted factorization
    ``target = dictionary @ coefficients`` and a random starting point.
    """

    spec: InstanceSpec
    target: Point = field(repr=False)
    dictionary: Point = field(repr=False)
    coefficients: Point = field(repr=False)
    dictionaryStart: Point = field(repr=False)
    coefficientsStart: Point = field(repr=False)

    @property
    def plantedPoint(self) -> Point:
        """
        The planted factorization, packed.
        """
        return np.concatenate(
            (packColumns(self.dictionary), packColumns(self.coefficients))
        )

    def startingPoint(self, normalize: bool = True) -> Point:
        """
        The starting point, packed.

        The raw starting dictionary has normally distributed entries and lies
        outside the domain of the regularizer; unless ``normalize`` is false,
        its columns are scaled to unit norm.
        """
        dictionary = self.dictionaryStart
        if normalize:
            dictionary = normalizedColumns(dictionary)
        return np.concatenate(
            (packColumns(dictionary), packColumns(self.coefficientsStart))
        )


def generateInstance(
    rows: int, atoms: int, signals: int, nonzeros: int, lam: float, seed: int
) -> DictLearnInstance:
    """
    Generate a planted instance from ``numpy.random.default_rng(seed)``.

    The planted dictionary has standard normal entries and unit-norm columns;
    each planted coefficient column has ``nonzeros`` standard normal entries
    in rows drawn without replacement.
    The starting dictionary and coefficients have standard normal entries.

    :raises ConfigurationError: if a dimension is not positive or
        ``nonzeros`` exceeds ``atoms``.
    """
    spec = InstanceSpec(
        rows=rows,
        atoms=atoms,
        signals=signals,
        nonzeros=nonzeros,
        lam=lam,
        seed=seed,
    )
    rng = np.random.default_rng(seed)

    dictionary = normalizedColumns(rng.standard_normal((rows, atoms)))

    coefficients = np.zeros((atoms, signals))
    for column in range(signals):
        support = rng.permutation(atoms)[:nonzeros]
        coefficients[support, column] = rng.standard_normal(nonzeros)

    dictionaryStart = rng.standard_normal((rows, atoms))
    coefficientsStart = rng.standard_normal((atoms, signals))

    log.debug("Generated instance {spec}", spec=spec)

    return DictLearnInstance(
        spec=spec,
        target=dictionary @ coefficients,
        dictionary=dictionary,
        coefficients=coefficients,
        dictionaryStart=dictionaryStart,
        coefficientsStart=coefficientsStart,
    )
