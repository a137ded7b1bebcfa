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
Tests for :mod:`nmprox.ext.enum`
"""

from ..enum import Names, auto, memberWithName
from ..trial import TestCase


__all__ = ()


class Flavor(Names):
    monotone = auto()
    average = auto()
    maxWindow = "max_window"


class NamesTests(TestCase):
    """
    Tests for :class:`Names`
    """

    def test_value(self) -> None:
        """
        :class:`Names` members generated with :func:`auto` have their names
        as values.
        """
        self.assertEqual(Flavor.monotone.value, "monotone")
        self.assertEqual(Flavor.average.value, "average")


class MemberWithNameTests(TestCase):
    """
    Tests for :func:`memberWithName`
    """

    def test_name(self) -> None:
        """
        :func:`memberWithName` finds a member by its name.
        """
        self.assertIdentical(memberWithName(Flavor, "average"), Flavor.average)

    def test_caseInsensitive(self) -> None:
        """
        :func:`memberWithName` ignores case.
        """
        self.assertIdentical(
            memberWithName(Flavor, "MONOTONE"), Flavor.monotone
        )

    def test_value(self) -> None:
        """
        :func:`memberWithName` finds a member by its string value, treating
        dashes as underscores.
        """
        self.assertIdentical(
            memberWithName(Flavor, "max-window"), Flavor.maxWindow
        )

    def test_unknown(self) -> None:
        """
        :func:`memberWithName` raises :exc:`KeyError` naming the valid options
        for an unknown name.
        """
        e = self.assertRaises(KeyError, memberWithName, Flavor, "nope")
        self.assertIn("'average'", str(e))
