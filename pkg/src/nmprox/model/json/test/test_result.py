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
Tests for :mod:`nmprox.model.json._result`
"""

from math import inf

import numpy as np

from nmprox.ext.json import jsonTextFromObject, objectFromJSONText
from nmprox.ext.trial import TestCase

from ..._counts import EvaluationCounts
from ..._enums import SolveStatus
from ..._result import SolveResult
from ..._trace import Trace
from .._json import (
    JSONCodecError,
    jsonSerialize,
    modelObjectFromJSONObject,
)


__all__ = ()


def result(**kwargs: object) -> SolveResult:
    values: dict[str, object] = dict(
        status=SolveStatus.converged,
        xFinal=np.array([1.0, -0.25]),
        xPrevious=np.array([0.5, 0.0]),
        phiFinal=1.5,
        finalResidual=3e-9,
        gammaFinal=0.125,
        iterations=7,
        backtracks=2,
        counts=EvaluationCounts(smooth=9, gradient=10, nonsmooth=9, prox=9),
        trace=Trace(),
    )
    values.update(kwargs)
    return SolveResult(**values)  # type: ignore[arg-type]


class SolveResultSerializationTests(TestCase):
    """
    Tests for serialization of :class:`SolveResult`
    """

    def test_serialize(self) -> None:
        """
        :func:`jsonSerialize` serializes a result with snake case keys.
        """
        self.assertEqual(
            jsonSerialize(result()),
            dict(
                status="converged",
                x_final=[1.0, -0.25],
                x_previous=[0.5, 0.0],
                phi_final=1.5,
                final_residual=3e-9,
                gamma_final=0.125,
                iterations=7,
                backtracks=2,
                counts=dict(prox_evals=9, grad_evals=10, f_evals=9, g_evals=9),
                restarted=False,
            ),
        )


class SolveResultDeserializationTests(TestCase):
    """
    Tests for deserialization of :class:`SolveResult`
    """

    def test_deserialize(self) -> None:
        """
        :func:`modelObjectFromJSONObject` reads back a serialized result,
        through JSON text.
        """
        original = result(
            status=SolveStatus.infeasibleStart, phiFinal=inf, restarted=True
        )
        text = jsonTextFromObject(jsonSerialize(original))
        decoded = modelObjectFromJSONObject(
            objectFromJSONText(text), SolveResult
        )

        self.assertIs(decoded.status, original.status)
        self.assertArrayEqual(decoded.xFinal, original.xFinal)
        self.assertArrayEqual(decoded.xPrevious, original.xPrevious)
        self.assertEqual(decoded.phiFinal, inf)
        self.assertEqual(decoded.finalResidual, original.finalResidual)
        self.assertEqual(decoded.gammaFinal, original.gammaFinal)
        self.assertEqual(decoded.iterations, original.iterations)
        self.assertEqual(decoded.backtracks, original.backtracks)
        self.assertEqual(decoded.counts, original.counts)
        self.assertTrue(decoded.restarted)
        self.assertEqual(len(decoded.trace), 0)

    def test_deserialize_missing(self) -> None:
        """
        :func:`modelObjectFromJSONObject` rejects results with missing keys.
        """
        json = jsonSerialize(result())
        assert isinstance(json, dict)
        del json["x_final"]

        self.assertRaises(
            JSONCodecError, modelObjectFromJSONObject, json, SolveResult
        )
