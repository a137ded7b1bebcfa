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
CSV reading and writing helpers
"""

from collections.abc import Callable, Iterable, Iterator, Sequence
from csv import Error as CSVError
from csv import reader, writer
from io import StringIO
from typing import IO, Any

from ._exceptions import TraceFormatError


__all__ = ()


def textFromValue(value: Any) -> str:
    """
    Render a cell value; floats use their shortest round-trip form.
    """
    if isinstance(value, float):
        return repr(value)
    return str(value)


def writeRows(
    io: IO[str], header: Sequence[str], rows: Iterable[Sequence[Any]]
) -> None:
    out = writer(io, lineterminator="\n")
    out.writerow(header)
    for row in rows:
        out.writerow([textFromValue(value) for value in row])


def textFromRows(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    io = StringIO()
    writeRows(io, header, rows)
    return io.getvalue()


def readRows(
    io: IO[str], header: Sequence[str], what: str
) -> Iterator[tuple[int, dict[str, str]]]:
    """
    Read rows of a CSV file with the given header.

    :return: Line numbers and rows keyed by column name.

    :raises TraceFormatError: if the header differs or a row has the wrong
        number of columns.
    """
    try:
        rows = reader(io)
        first = next(rows, None)
        if first is None:
            raise TraceFormatError(f"Empty {what}")
        if list(first) != list(header):
            raise TraceFormatError(
                f"Invalid {what} header: expected {','.join(header)}, "
                f"got {','.join(first)}"
            )
        for row in rows:
            if not row:
                continue
            if len(row) != len(header):
                raise TraceFormatError(
                    f"Invalid {what} row on line {rows.line_num}: "
                    f"expected {len(header)} columns, got {len(row)}"
                )
            yield rows.line_num, dict(zip(header, row))
    except CSVError as e:
        raise TraceFormatError(f"Unreadable {what}: {e}") from e


def parseCell(
    row: dict[str, str],
    column: str,
    parse: Callable[[str], Any],
    line: int,
    what: str,
) -> Any:
    try:
        return parse(row[column])
    except ValueError as e:
        raise TraceFormatError(
            f"Invalid {column} in {what} on line {line}: {row[column]!r}"
        ) from e
