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
Finite difference gradient checks
"""

from math import isfinite

import numpy as np

from nmprox.model import Point

from ._abc import SmoothTerm
from ._exceptions import OracleFaultError, ProblemError


__all__ = ()


def checkGradient(smooth: SmoothTerm, x: Point, h: float = 1e-6) -> float:
    """
    Compare the gradient of ``smooth`` at ``x`` with central differences of
    step ``h``.

    :return: The largest coordinate discrepancy, relative to
        ``max(1, |gradient coordinate|)``.
    """
    if not h > 0:
        raise ProblemError(f"Difference step must be positive, not {h}")

    gradient = np.asarray(smooth.gradient(x), dtype=np.float64)
    if not np.all(np.isfinite(gradient)):
        raise OracleFaultError("Gradient has non-finite entries")

    worst = 0.0
    shifted = np.array(x, dtype=np.float64)

    for i in range(x.size):
        shifted[i] = x[i] + h
        forward = float(smooth.value(shifted))
        shifted[i] = x[i] - h
        backward = float(smooth.value(shifted))
        shifted[i] = x[i]

        if not (isfinite(forward) and isfinite(backward)):
            raise OracleFaultError(
                f"Smooth term is not finite near coordinate {i}"
            )

        difference = (forward - backward) / (2 * h)
        discrepancy = abs(difference - gradient[i]) / max(1.0, abs(gradient[i]))
        worst = max(worst, float(discrepancy))

    return worst
