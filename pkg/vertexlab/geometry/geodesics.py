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

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np
from scipy.integrate import solve_ivp

from vertexlab.curves.curve import ClosedCurve
from vertexlab.errors import (
    GeodesicEscapeError,
    InjectivityRadiusError,
    ParameterError,
)
from vertexlab.geometry.charts import ConformalChart
from vertexlab.geometry.revolution import RevolutionSurface
from vertexlab.utils import TrigonometricSeries
from vertexlab.vllogging import logging

Metric = Union[ConformalChart, RevolutionSurface]

DEFAULT_RTOL = 1e-12
DEFAULT_ATOL = 1e-13
UNIT_TOL = 1e-8
MIN_DIRECTIONS = 64
# Fraction of the first focal distance allowed for metric circles.
INJECTIVITY_FRACTION = 0.25


@dataclass(frozen=True)
class GeodesicFan:
    r"""Endpoints of unit speed geodesics issued from one point.

    ``jacobi`` and ``jacobi_prime`` hold the normal Jacobi field :math:`j` with :math:`j(0) = 0`,
    :math:`j'(0) = 1`, evaluated at the common length.
    """

    points: np.ndarray
    velocities: np.ndarray
    jacobi: np.ndarray
    jacobi_prime: np.ndarray
    length: float


def _check_unit(v: np.ndarray) -> None:
    norms = np.linalg.norm(v, axis=1)
    if np.any(np.abs(norms - 1.0) > UNIT_TOL):
        raise ParameterError(
            "Initial directions must be unit vectors in the orthonormal frame, got |v|={:.6g}".format(
                norms[np.argmax(np.abs(norms - 1.0))]
            )
        )


def geodesic_shoot_many(
    metric: Metric,
    p: np.ndarray,
    directions: np.ndarray,
    s: float,
    rtol: float = DEFAULT_RTOL,
    atol: float = DEFAULT_ATOL,
) -> GeodesicFan:
    r"""Integrate unit speed geodesics from ``p`` along every row of ``directions`` for length ``s``.

    Directions are given in the orthonormal frame of the metric at ``p``. Along each geodesic
    the Jacobi equation :math:`j'' + K j = 0` is carried so the fan also describes the metric
    circle of radius ``s``.

    Raises:
        GeodesicEscapeError: a geodesic leaves the domain before length ``s``.
    """
    p = np.asarray(p, dtype=float).reshape(1, 2)
    directions = np.atleast_2d(np.asarray(directions, dtype=float))
    _check_unit(directions)
    if s < 0.0:
        raise ParameterError("Geodesic length must be non-negative")
    metric.check_domain(p)
    m = directions.shape[0]

    start = np.repeat(p, m, axis=0)
    velocity = metric.coordinate_velocity(start, directions)
    if s == 0.0:
        return GeodesicFan(start, velocity, np.zeros(m), np.ones(m), 0.0)

    def unpack(y):
        state = y.reshape(6, m)
        return state[0:2].T, state[2:4].T, state[4], state[5]

    def rhs(_, y):
        points, velocities, j, j_dot = unpack(y)
        acceleration = metric.geodesic_acceleration(points, velocities)
        curvature = metric.gauss_curvature_at(points)
        return np.concatenate(
            [velocities[:, 0], velocities[:, 1], acceleration[:, 0], acceleration[:, 1], j_dot, -curvature * j]
        )

    def escape(_, y):
        points = y.reshape(6, m)[0:2].T
        return float(np.min(metric.escape_margin(points)))

    escape.terminal = True
    escape.direction = -1

    y0 = np.concatenate(
        [start[:, 0], start[:, 1], velocity[:, 0], velocity[:, 1], np.zeros(m), np.ones(m)]
    )
    solution = solve_ivp(rhs, (0.0, float(s)), y0, method="DOP853", rtol=rtol, atol=atol, events=escape)
    if solution.status == 1:
        exit_s = float(solution.t_events[0][0])
        points = solution.y_events[0][0].reshape(6, m)[0:2].T
        worst = int(np.argmin(metric.escape_margin(points)))
        logging.debug("Geodesic escape", "s={:.6g} direction={}".format(exit_s, worst))
        raise GeodesicEscapeError(
            "Geodesic left the domain at s={:.6g} before reaching s={:.6g}".format(exit_s, s),
            exit_parameter=exit_s,
            position=tuple(points[worst]),
        )
    if solution.status != 0:
        raise GeodesicEscapeError(
            "Geodesic integration failed: {}".format(solution.message),
            exit_parameter=float(solution.t[-1]),
        )
    points, velocities, j, j_dot = unpack(solution.y[:, -1])
    return GeodesicFan(points.copy(), velocities.copy(), j.copy(), j_dot.copy(), float(s))


def geodesic_shoot(
    metric: Metric,
    p: np.ndarray,
    v: np.ndarray,
    s: float,
    rtol: float = DEFAULT_RTOL,
    atol: float = DEFAULT_ATOL,
) -> np.ndarray:
    """Endpoint of the unit speed geodesic from ``p`` with initial direction ``v`` after length ``s``."""
    fan = geodesic_shoot_many(metric, p, np.reshape(v, (1, 2)), s, rtol=rtol, atol=atol)
    return fan.points[0]


def focal_distance(metric: Metric, center: np.ndarray, probes: int = 513) -> float:
    r"""First focal distance :math:`\pi/\sqrt{K_{max}}` for the largest curvature seen on the domain."""
    if isinstance(metric, ConformalChart):
        k_max = metric.nominal_curvature
    else:
        t = np.linspace(metric.interval[0], metric.interval[1], probes)
        k_max = float(np.max(metric.gauss_curvature(t)))
    return np.inf if k_max <= 0.0 else float(np.pi / np.sqrt(k_max))


@dataclass(frozen=True, eq=False)
class MetricCircle(ClosedCurve):
    r"""Geodesic circle parametrized by the initial direction angle.

    Curvature and speed come from Jacobi fields, :math:`\kappa = j'(\rho)/j(\rho)` and
    :math:`ds = j(\rho)\,d\phi`, interpolated trigonometrically in the angle.
    """

    center: Optional[np.ndarray] = None
    radius: float = 0.0
    kappa_series: Optional[TrigonometricSeries] = None
    jacobi_series: Optional[TrigonometricSeries] = None

    def geodesic_curvature(self, t: np.ndarray) -> np.ndarray:
        return self.kappa_series(t)

    def metric_speed(self, t: np.ndarray) -> np.ndarray:
        return self.jacobi_series(t)

    def kappa_prime(self, t: np.ndarray) -> np.ndarray:
        return self.kappa_series(t, 1) / self.jacobi_series(t)


def metric_circle(
    metric: Metric,
    center: np.ndarray,
    radius: float,
    n: int = 256,
    rtol: float = DEFAULT_RTOL,
    atol: float = DEFAULT_ATOL,
) -> MetricCircle:
    """Metric circle of ``radius`` about ``center`` sampled over ``n`` equispaced directions.

    Raises:
        InjectivityRadiusError: ``radius`` is beyond a quarter of the focal distance.
        GeodesicEscapeError: a radial geodesic leaves the domain.
    """
    if n < MIN_DIRECTIONS:
        raise ParameterError("metric_circle needs at least {} directions".format(MIN_DIRECTIONS))
    if not radius > 0.0:
        raise ParameterError("Metric circle radius must be positive")
    guard = INJECTIVITY_FRACTION * focal_distance(metric, center)
    if radius > guard:
        raise InjectivityRadiusError(
            "Radius {:.6g} exceeds the injectivity guard {:.6g}".format(radius, guard)
        )

    phi = 2.0 * np.pi * np.arange(n) / n
    directions = np.stack([np.cos(phi), np.sin(phi)], axis=1)
    fan = geodesic_shoot_many(metric, center, directions, radius, rtol=rtol, atol=atol)

    positions = TrigonometricSeries.interpolate(fan.points, 2.0 * np.pi)
    kappa = TrigonometricSeries.interpolate(fan.jacobi_prime / fan.jacobi, 2.0 * np.pi)
    jacobi = TrigonometricSeries.interpolate(fan.jacobi, 2.0 * np.pi)
    logging.debug(
        "Metric circle",
        "radius={:.4g} harmonics={} kappa in [{:.6g}, {:.6g}]".format(
            radius, kappa.harmonics, kappa(phi).min(), kappa(phi).max()
        ),
    )
    return MetricCircle(
        period=2.0 * np.pi,
        evaluator=positions,
        ambient=metric,
        derivative_evaluators=(
            lambda t: positions(t, 1),
            lambda t: positions(t, 2),
            lambda t: positions(t, 3),
        ),
        name="metric-circle",
        params={"radius": float(radius), "center": [float(c) for c in np.ravel(center)]},
        center=np.asarray(center, dtype=float),
        radius=float(radius),
        kappa_series=kappa,
        jacobi_series=jacobi,
    )
