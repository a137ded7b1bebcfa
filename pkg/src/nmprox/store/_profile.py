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
Performance profile data files.
"""

from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import ClassVar

from attrs import field, frozen
from twisted.logger import Logger

from nmprox.model import ProfileCurve

from ._csv import textFromValue


__all__ = ()


def freezeCurves(curves: Iterable[ProfileCurve]) -> tuple[ProfileCurve, ...]:
    return tuple(curves)


def textFromProfileCurve(curve: ProfileCurve) -> str:
    """
    Render a curve as whitespace separated ``budget fraction`` lines.
    """
    return "".join(
        f"{textFromValue(budget)} {textFromValue(fraction)}\n"
        for budget, fraction in zip(curve.budgets, curve.fractions)
    )


@frozen(kw_only=True)
class ProfileExporter:
    """
    Writes one data file per profile curve.
    """

    _log: ClassVar[Logger] = Logger()

    curves: Sequence[ProfileCurve] = field(converter=freezeCurves)

    def writeToDirectory(self, directory: Path) -> list[Path]:
        """
        Write ``<variant>.dat`` files into ``directory``, creating it if
        needed.

        :return: The paths written.
        """
        directory.mkdir(parents=True, exist_ok=True)
        paths = []

        for curve in self.curves:
            path = directory / f"{curve.variant}.dat"
            path.write_text(textFromProfileCurve(curve))
            self._log.info(
                "Wrote profile for {variant} to {path}",
                variant=curve.variant,
                path=path,
            )
            paths.append(path)

        return paths
