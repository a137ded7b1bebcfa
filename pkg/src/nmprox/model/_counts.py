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
Oracle evaluation counts
"""

from attrs import frozen


__all__ = ()


@frozen(kw_only=True)
class EvaluationCounts:
    """
    Snapshot of oracle evaluation tallies.
    """

    smooth: int = 0
    gradient: int = 0
    nonsmooth: int = 0
    prox: int = 0

    def __sub__(self, other: "EvaluationCounts") -> "EvaluationCounts":
        return EvaluationCounts(
            smooth=self.smooth - other.smooth,
            gradient=self.gradient - other.gradient,
            nonsmooth=self.nonsmooth - other.nonsmooth,
            prox=self.prox - other.prox,
        )
