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
Extensions to :mod:`enum`
"""

from enum import Enum, IntEnum, auto, unique
from typing import TypeVar


__all__ = (
    "Enum",
    "IntEnum",
    "Names",
    "auto",
    "memberWithName",
    "unique",
)


class Names(Enum):
    """
    Enumerated names.
    """

    @staticmethod
    def _generate_next_value_(
        name: str, start: int, count: int, last_values: list[object]
    ) -> str:
        return name


E = TypeVar("E", bound=Enum)


def memberWithName(enumClass: type[E], name: str) -> E:
    """
    Look up a member of an enumeration by name, ignoring case and treating
    ``-`` and ``_`` as equivalent.

    :raises KeyError: if no member matches, with the valid names listed in the
        message.
    """
    wanted = name.strip().lower().replace("-", "_")

    for member in enumClass:
        if member.name.lower() == wanted:
            return member
        if isinstance(member.value, str) and member.value.lower() == wanted:
            return member

    names = ", ".join(repr(member.name) for member in enumClass)
    raise KeyError(f"Invalid {enumClass.__name__} {name!r} (options: {names})")
