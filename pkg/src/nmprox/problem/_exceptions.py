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
Problem exceptions.
"""

from attrs import mutable


__all__ = ()


@mutable
class ProblemError(Exception):
    """
    Problem error.
    """

    message: str


@mutable
class DimensionMismatchError(ProblemError):
    """
    A point or block does not have the dimension the problem declares.
    """


@mutable
class InvalidPointError(ProblemError):
    """
    A point passed to an oracle has non-finite entries.
    """


@mutable
class OracleFaultError(ProblemError):
    """
    An oracle returned NaN, or a non-finite value where a finite one is
    required.
    """


@mutable
class InfeasibleStartError(ProblemError):
    """
    The starting point lies outside the domain of the nonsmooth term.
    """


@mutable
class ProxLayoutError(DimensionMismatchError):
    """
    A packed point does not match the block layout a proximal mapping declares.
    """
