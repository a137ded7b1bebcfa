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
Logging setup for nmprox commands.
"""

from twisted.logger import (
    FilteringLogObserver,
    LogLevelFilterPredicate,
    globalLogBeginner,
)

from ._options import NMProxOptions


__all__ = ("startLogging",)


def startLogging(options: NMProxOptions) -> None:
    """
    Begin logging to the log file chosen by ``options``, with its observer
    factory and level.
    """
    logFile = options["logFile"]
    observer = options["fileLogObserverFactory"](logFile)
    predicate = LogLevelFilterPredicate(
        defaultLogLevel=options.get("logLevel", options.defaultLogLevel)
    )

    globalLogBeginner.beginLoggingTo(
        [FilteringLogObserver(observer, [predicate])]
    )
