# The MIT License (MIT)
# Copyright © 2024 vertexlab developers

# Permission is hereby granted, free of charge, to any person obtaining a copy of this software and associated
# documentation files (the “Software”), to deal in the Software without restriction, including without limitation
# the rights to use, copy, modify, merge, publish, distribute, sublicense, and/or sell copies of the Software,
# and to permit persons to whom the Software is furnished to do so, subject to the following conditions:

# The above copyright notice and this permission notice shall be included in all copies or substantial portions of
# the Software.

# THE SOFTWARE IS PROVIDED “AS IS”, WITHOUT WARRANTY OF ANY KIND, EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO
# THE WARRANTIES OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL
# THE AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION
# OF CONTRACT, TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
# DEALINGS IN THE SOFTWARE.

import dataclasses
from enum import Enum

import numpy as np

from vertexlab.curves.curve import ClosedCurve
from vertexlab.errors import DomainError, ParameterError, PoleError
from vertexlab.geometry.charts import (
    EUCLIDEAN,
    HALF_PLANE,
    POLE_GUARD,
    SPHERE_STEREO,
    ChartKind,
    ConformalChart,
)
from vertexlab.maps.deck import pullback_residual

TRANSFER_PROBES = 4096
ISOMETRY_TOL = 1e-10


class TransferDirection(str, Enum):
    SPHERE_TO_PLANE = "sphere-to-plane"
    PLANE_TO_SPHERE = "plane-to-sphere"


def _chart_kind(curve: ClosedCurve):
    return getattr(curve.ambient, "kind", None)


def _swap_chart(curve: ClosedCurve, chart: ConformalChart) -> ClosedCurve:
    # a lift that closes through a deck motion needs that motion to be an isometry of both metrics
    if curve.quotient is not None and curve.deck_power != 0:
        points = curve.position(curve.grid(64))
        if pullback_residual(curve.quotient.generator, chart, points) > ISOMETRY_TOL:
            raise ParameterError(
                "Deck motion {} is not an isometry of the {} chart".format(
                    curve.quotient.generator.kind.value, chart.name
                )
            )
    transferred = curve.with_ambient(chart)
    if transferred.quotient is not None:
        transferred = _with_quotient_chart(transferred, chart)
    return transferred


def _with_quotient_chart(curve: ClosedCurve, chart: ConformalChart) -> ClosedCurve:
    quotient = dataclasses.replace(curve.quotient, chart=chart)
    return dataclasses.replace(curve, quotient=quotient)


def stereographic_transfer(curve: ClosedCurve, direction: TransferDirection) -> ClosedCurve:
    r"""Move a curve between the plane and the sphere through stereographic projection.

    Coordinates are unchanged, only the metric is swapped, so vertex parameters coincide.

    Raises:
        PoleError: a sphere curve reaches the projection pole.
    """
    direction = TransferDirection(direction)
    if direction == TransferDirection.PLANE_TO_SPHERE:
        if _chart_kind(curve) != ChartKind.EUCLIDEAN:
            raise ParameterError("plane-to-sphere needs a Euclidean curve")
        return _swap_chart(curve, SPHERE_STEREO)

    if _chart_kind(curve) != ChartKind.SPHERE_STEREO:
        raise ParameterError("sphere-to-plane needs a stereographic sphere curve")
    radius = np.hypot(*curve.position(curve.grid(TRANSFER_PROBES)).T)
    if np.max(radius) > POLE_GUARD:
        raise PoleError("Curve comes within the pole guard of the projection pole")
    return _swap_chart(curve, EUCLIDEAN)


def halfplane_inclusion_transfer(curve: ClosedCurve) -> ClosedCurve:
    """Swap a curve between the hyperbolic half-plane and the Euclidean plane.

    Raises:
        DomainError: a Euclidean curve leaves the upper half-plane.
    """
    kind = _chart_kind(curve)
    if kind == ChartKind.HALF_PLANE:
        return _swap_chart(curve, EUCLIDEAN)
    if kind != ChartKind.EUCLIDEAN:
        raise ParameterError("Inclusion transfer needs a Euclidean or half-plane curve")
    y = curve.position(curve.grid(TRANSFER_PROBES))[:, 1]
    if np.min(y) <= 0.0:
        raise DomainError("Curve leaves the upper half-plane (min y = {:.3g})".format(np.min(y)))
    return _swap_chart(curve, HALF_PLANE)


def antipodal_map(points: np.ndarray) -> np.ndarray:
    r"""Antipodal map of the sphere in stereographic coordinates, :math:`p \mapsto -p/|p|^2`."""
    points = np.atleast_2d(np.asarray(points, dtype=float))
    norm2 = np.sum(points**2, axis=1)
    if np.any(norm2 == 0.0):
        raise PoleError("The antipode of the south pole is the projection pole")
    return -points / norm2[:, None]
