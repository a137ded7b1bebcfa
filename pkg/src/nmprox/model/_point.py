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
Points
"""

from collections.abc import Iterable
from typing import TypeAlias

import numpy as np
from numpy.typing import ArrayLike, NDArray


__all__ = ()


Point: TypeAlias = NDArray[np.float64]


def asPoint(values: ArrayLike | Iterable[float]) -> Point:
    """
    Convert the given values into a flat, contiguous array of 64-bit floats.
    The result is a copy; callers may mutate it freely.
    """
    return np.array(values, dtype=np.float64).reshape(-1)


def squaredNorm(x: Point) -> float:
    """
    Squared Euclidean norm.
    """
    return float(np.dot(x, x))


def asMatrix(values: ArrayLike) -> NDArray[np.float64]:
    """
    Convert the given values into a two-dimensional array of 64-bit floats.
    """
    matrix = np.array(values, dtype=np.float64)
    if matrix.ndim != 2:
        raise ValueError(f"Expected a matrix, got shape {matrix.shape}")
    return matrix
