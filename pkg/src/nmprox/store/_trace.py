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
Iteration trace CSV export and import.
"""

from collections.abc import Iterable
from enum import Enum, unique
from io import StringIO
from typing import IO, ClassVar

from attrs import frozen
from twisted.logger import Logger

from nmprox.model import IterationRecord, Trace

from ._csv import parseCell, readRows, textFromRows, writeRows
from ._exceptions import TraceFormatError


__all__ = ()


@unique
class TraceColumn(Enum):
    """
    Trace CSV columns
    """

    k = "k"
    gamma = "gamma"
    phi = "phi"
    merit = "Phi"
    residual = "residual"
    backtracks = "backtracks"
    stepNorm = "step_norm"
    proxEvaluations = "prox_evals"
    gradientEvaluations = "grad_evals"
    smoothEvaluations = "f_evals"
    nonsmoothEvaluations = "g_evals"


class TraceColumnType(Enum):
    """
    Trace CSV column types
    """

    k = int
    gamma = float
    phi = float
    merit = float
    residual = float
    backtracks = int
    stepNorm = float
    proxEvaluations = int
    gradientEvaluations = int
    smoothEvaluations = int
    nonsmoothEvaluations = int


TRACE_HEADER = tuple(column.value for column in TraceColumn)


@frozen(kw_only=True)
class TraceExporter:
    """
    Iteration trace CSV exporter.
    """

    _log: ClassVar[Logger] = Logger()

    trace: Trace

    def _rows(self) -> Iterable[tuple[int | float, ...]]:
        for record in self.trace:
            yield tuple(getattr(record, column.name) for column in TraceColumn)

    def asText(self) -> str:
        """
        Export the trace as CSV text.
        """
        return textFromRows(TRACE_HEADER, self._rows())

    def writeTo(self, io: IO[str]) -> None:
        """
        Export the trace as CSV to an open file.
        """
        self._log.info(
            "Writing trace with {count} records", count=len(self.trace)
        )
        writeRows(io, TRACE_HEADER, self._rows())


@frozen(kw_only=True)
class TraceImporter:
    """
    Iteration trace CSV importer.
    """

    _log: ClassVar[Logger] = Logger()

    trace: Trace

    @classmethod
    def fromText(cls, text: str) -> "TraceImporter":
        return cls.fromIO(StringIO(text))

    @classmethod
    def fromIO(cls, io: IO[str]) -> "TraceImporter":
        """
        Import a trace from CSV.

        :raises TraceFormatError: if the CSV is not a valid trace.
        """
        what = "trace"
        records = []

        for line, row in readRows(io, TRACE_HEADER, what):
            records.append(
                IterationRecord(
                    **{
                        column.name: parseCell(
                            row,
                            column.value,
                            getattr(TraceColumnType, column.name).value,
                            line,
                            what,
                        )
                        for column in TraceColumn
                    }
                )
            )

        for index, record in enumerate(records):
            if record.k != index:
                raise TraceFormatError(
                    f"Trace record {index} has iteration number {record.k}"
                )

        cls._log.info("Read trace with {count} records", count=len(records))
        return cls(trace=Trace(records=records))
