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
Closed-form proximal mappings

Where the proximal mapping is set-valued these functions return one fixed
selection: the hard threshold keeps entries exactly at the threshold, and a
zero column projects onto the first standard basis vector.
"""

import numpy as np

from nmprox.model import Point
from nmprox.problem import ProxLayoutError


__all__ = ()


def proxL1(x: Point, gamma: float, lam: float) -> Point:
    """
    Soft threshold: the proximal mapping of ``lam * ||.||_1``.
    """
    return np.sign(x) * np.maximum(np.abs(x) - gamma * lam, 0.0)


def proxL0(x: Point, gamma: float, lam: float) -> Point:
    """
    Hard threshold: the proximal mapping of ``lam * ||.||_0``.
    Entries with ``x_i^2 >= 2 gamma lam`` are kept, the rest are zeroed.
    """
    keep = x * x >= 2.0 * gamma * lam
    return np.where(keep, x, 0.0)


def columnsOf(x: Point, rows: int) -> Point:
    """
    View a packed point as a matrix with ``rows`` rows, in column-major order.
    """
    if rows <= 0 or x.size % rows:
        raise ProxLayoutError(
            f"Point of size {x.size} does not pack columns of length {rows}"
        )
    return x.reshape((rows, x.size // rows), order="F")


def packColumns(matrix: Point) -> Point:
    """
    Flatten a matrix in column-major order.
    """
    return matrix.reshape(-1, order="F")


def proxUnitSphereColumns(x: Point, gamma: float, rows: int) -> Point:
    """
    Projection of each column onto the unit sphere: the proximal mapping of the
    indicator of matrices with unit-norm columns, for any ``gamma``.
    """
    columns = columnsOf(x, rows)
    norms = np.linalg.norm(columns, axis=0)
    zero = norms == 0.0

    projected = columns / np.where(zero, 1.0, norms)
    projected[:, zero] = 0.0
    projected[0, zero] = 1.0

    return packColumns(projected)


def splitDictLearn(
    x: Point, rows: int, atoms: int, signals: int
) -> tuple[Point, Point]:
    """
    Split a point packing the dictionary ``D`` (``rows x atoms``) and the
    coefficients ``C`` (``atoms x signals``), both column-major, into its
    two blocks.
    """
    dictionarySize = rows * atoms
    if x.size != dictionarySize + atoms * signals:
        raise ProxLayoutError(
            f"Point of size {x.size} does not pack a {rows}x{atoms} dictionary "
            f"and {atoms}x{signals} coefficients"
        )
    return x[:dictionarySize], x[dictionarySize:]


def proxDictLearn(
    x: Point, gamma: float, lam: float, rows: int, atoms: int, signals: int
) -> Point:
    """
    Proximal mapping of the dictionary learning regularizer: unit-norm columns
    for the dictionary block and ``lam * ||.||_0`` for the coefficient block.
    """
    dictionary, coefficients = splitDictLearn(x, rows, atoms, signals)
    return np.concatenate(
        (
            proxUnitSphereColumns(dictionary, gamma, rows),
            proxL0(coefficients, gamma, lam),
        )
    )


def subdifferentialResidualL1(x: Point, v: Point, lam: float) -> float:
    """
    Distance from ``-v`` to the subdifferential of ``lam * ||.||_1`` at ``x``.
    """
    distances = np.where(
        x != 0.0,
        np.abs(-v - lam * np.sign(x)),
        np.maximum(np.abs(v) - lam, 0.0),
    )
    return float(np.linalg.norm(distances))


def subdifferentialResidualL0(x: Point, v: Point) -> float:
    """
    Distance from ``-v`` to the limiting subdifferential of ``lam * ||.||_0``
    at ``x``, which is zero on nonzero coordinates and unrestricted on the
    others; ``lam`` does not enter.
    """
    return float(np.linalg.norm(np.where(x != 0.0, v, 0.0)))


def subdifferentialResidualSphereColumns(
    x: Point, v: Point, rows: int
) -> float:
    """
    Distance from ``-v`` to the normal cone of the unit-norm column set at
    ``x``: per column, the part of ``v`` orthogonal to the column.
    """
    columns = columnsOf(x, rows)
    directions = columnsOf(v, rows)
    tangential = directions - columns * np.sum(columns * directions, axis=0)
    return float(np.linalg.norm(tangential))
