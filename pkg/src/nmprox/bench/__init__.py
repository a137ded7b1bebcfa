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
Dictionary learning benchmark: planted instances, suite runs and performance
profiles.
"""

from ._dictlearn import DictLearnLoss, dictLearnProblem
from ._exceptions import BenchmarkError
from ._instance import DictLearnInstance, InstanceSpec, generateInstance
from ._json import InstanceSpecJSONKey
from ._profile import ProfileMetric, performanceProfile
from ._suite import (
    SuiteSpec,
    checkOrdering,
    medianProxEvaluations,
    runCase,
    runSuite,
    suiteMetadata,
    suiteVariants,
)


__all__ = (
    "BenchmarkError",
    "DictLearnInstance",
    "DictLearnLoss",
    "InstanceSpec",
    "InstanceSpecJSONKey",
    "ProfileMetric",
    "SuiteSpec",
    "checkOrdering",
    "dictLearnProblem",
    "generateInstance",
    "medianProxEvaluations",
    "performanceProfile",
    "runCase",
    "runSuite",
    "suiteMetadata",
    "suiteVariants",
)
