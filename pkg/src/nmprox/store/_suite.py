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
Benchmark result table CSV export and import.
"""

from collections.abc import Iterable, Sequence
from enum import Enum, unique
from io import StringIO
from typing import IO, Any, ClassVar

from attrs import field, frozen
from twisted.logger import Logger

from nmprox.model import SuiteRow

from ._csv import parseCell, readRows, textFromRows, writeRows


__all__ = ()


@unique
class SuiteColumn(Enum):
    """
    Result table CSV columns
    """

    instanceSeed = "instance_seed"
    variant = "variant"
    status = "status"
    iterations = "iters"
    proxEvaluations = "prox_evals"
    gradientEvaluations = "grad_evals"
    phiFinal = "phi_final"
    residualFinal = "residual_final"


class SuiteColumnType(Enum):
    """
    Result table CSV column types
    """

    instanceSeed = int
    variant = str
    status = str
    iterations = int
    proxEvaluations = int
    gradientEvaluations = int
    phiFinal = float
    residualFinal = float


SUITE_HEADER = tuple(column.value for column in SuiteColumn)


def freezeRows(rows: Iterable[SuiteRow]) -> tuple[SuiteRow, ...]:
    return tuple(rows)


@frozen(kw_only=True)
class SuiteTableExporter:
    """
    Benchmark result table CSV exporter.
    """

    _log: ClassVar[Logger] = Logger()

    rows: Sequence[SuiteRow] = field(converter=freezeRows)

    def _cells(self) -> Iterable[tuple[Any, ...]]:
        for row in self.rows:
            yield tuple(getattr(row, column.name) for column in SuiteColumn)

    def asText(self) -> str:
        return textFromRows(SUITE_HEADER, self._cells())

    def writeTo(self, io: IO[str]) -> None:
        self._log.info("Writing {count} result rows", count=len(self.rows))
        writeRows(io, SUITE_HEADER, self._cells())


@frozen(kw_only=True)
class SuiteTableImporter:
    """
    Benchmark result table CSV importer.
    """

    _log: ClassVar[Logger] = Logger()

    rows: Sequence[SuiteRow] = field(converter=freezeRows)

    @classmethod
    def fromText(cls, text: str) -> "SuiteTableImporter":
        return cls.fromIO(StringIO(text))

    @classmethod
    def fromIO(cls, io: IO[str]) -> "SuiteTableImporter":
        """
        Import a result table from CSV.

        :raises TraceFormatError: if the CSV is not a valid result table.
        """
        what = "result table"
        rows = [
            SuiteRow(
                **{
                    column.name: parseCell(
                        row,
                        column.value,
                        getattr(SuiteColumnType, column.name).value,
                        line,
                        what,
                    )
                    for column in SuiteColumn
                }
            )
            for line, row in readRows(io, SUITE_HEADER, what)
        ]
        cls._log.info("Read {count} result rows", count=len(rows))
        return cls(rows=rows)
