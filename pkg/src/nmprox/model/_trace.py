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
Iteration traces
"""

from collections.abc import Iterable, Iterator, Sequence

from attrs import field, frozen

from ._counts import EvaluationCounts


__all__ = ()


@frozen(kw_only=True)
class IterationRecord:
    """
    Log entry for one accepted iteration.

    ``residual`` is the fixed-point residual ``||x^k - x^{k-1}|| / gamma_k``.
    Record ``k = 0`` describes the starting point: its stepsize is the initial
    stepsize, its step and residual are zero, and its counts cover the initial
    evaluations.
    Evaluation counts are cumulative from the start of the solve.
    """

    k: int
    gamma: float
    phi: float
    merit: float
    residual: float
    backtracks: int
    stepNorm: float
    proxEvaluations: int
    gradientEvaluations: int
    smoothEvaluations: int
    nonsmoothEvaluations: int

    @property
    def counts(self) -> EvaluationCounts:
        return EvaluationCounts(
            smooth=self.smoothEvaluations,
            gradient=self.gradientEvaluations,
            nonsmooth=self.nonsmoothEvaluations,
            prox=self.proxEvaluations,
        )


def freezeRecords(
    records: Iterable[IterationRecord],
) -> tuple[IterationRecord, ...]:
    return tuple(records)


@frozen(kw_only=True)
class Trace(Sequence[IterationRecord]):
    """
    Sequence of iteration records, starting with the record for the starting
    point (when the solve got that far).
    """

    records: tuple[IterationRecord, ...] = field(
        factory=tuple, converter=freezeRecords
    )

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[IterationRecord]:
        return iter(self.records)

    def __getitem__(  # type: ignore[override]
        self, index: int
    ) -> IterationRecord:
        return self.records[index]

    @property
    def initial(self) -> IterationRecord | None:
        """
        The record for the starting point, if any.
        """
        if self.records and self.records[0].k == 0:
            return self.records[0]
        return None

    @property
    def iterations(self) -> tuple[IterationRecord, ...]:
        """
        The records of accepted iterations, excluding the starting point.
        """
        return tuple(record for record in self.records if record.k > 0)
