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
Command exit codes
"""

from nmprox.ext.enum import IntEnum, unique


__all__ = ()


@unique
class ExitCode(IntEnum):
    """
    Exit codes of nmprox commands.

      * OK: the solve converged, the trace passed, or the command completed.
      * Usage: invalid arguments, specification, or input file.
      * Not converged: the solve stopped without meeting the tolerance.
      * Check failed: a trace failed a check or could not be read.
    """

    ok = 0
    usage = 1
    notConverged = 2
    checkFailed = 3
