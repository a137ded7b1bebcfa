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
Closed-form proximal mappings and the nonsmooth terms built on them.
"""

from ._prox import (
    columnsOf,
    packColumns,
    proxDictLearn,
    proxL0,
    proxL1,
    proxUnitSphereColumns,
    splitDictLearn,
    subdifferentialResidualL0,
    subdifferentialResidualL1,
    subdifferentialResidualSphereColumns,
)
from ._terms import (
    DictLearnRegularizer,
    L0Norm,
    L1Norm,
    UnitSphereColumns,
    ZeroTerm,
)


__all__ = (
    "DictLearnRegularizer",
    "L0Norm",
    "L1Norm",
    "UnitSphereColumns",
    "ZeroTerm",
    "columnsOf",
    "packColumns",
    "proxDictLearn",
    "proxL0",
    "proxL1",
    "proxUnitSphereColumns",
    "splitDictLearn",
    "subdifferentialResidualL0",
    "subdifferentialResidualL1",
    "subdifferentialResidualSphereColumns",
)
