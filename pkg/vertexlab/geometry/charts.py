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
from enum import Enum
from typing import TYPE_CHECKING, Optional, Tuple

import numpy as np

from vertexlab.errors import DomainError, RegularityError

if TYPE_CHECKING:
    from vertexlab.curves.curve import ClosedCurve

# Velocities below this are treated as singular.
REGULARITY_TOL = 1e-8
# Geodesics in the half-plane are stopped below this height.
HALF_PLANE_FLOOR = 1e-12
# Stereographic points beyond this radius are treated as the pole.
POLE_GUARD = 1e6


class ChartKind(str, Enum):
    EUCLIDEAN = "euclidean"
    HALF_PLANE = "half-plane"
    SPHERE_STEREO = "sphere-stereo"


def _as_xy(points: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    points = np.atleast_2d(np.asarray(points, dtype=float))
    return points[:, 0], points[:, 1]


def _cross(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a[:, 0] * b[:, 1] - a[:, 1] * b[:, 0]


def _dot(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.einsum("ij,ij->i", a, b)


@dataclass(frozen=True)
class ConformalChart:
    r"""Planar domain carrying the metric :math:`\varphi^2 (dx^2 + dy^2)`.

    ``EUCLIDEAN`` has :math:`\varphi = 1`, ``HALF_PLANE`` has :math:`\varphi = 1/y` on :math:`y > 0`
    and ``SPHERE_STEREO`` has :math:`\varphi = 2/(1 + x^2 + y^2)`, the round unit sphere seen through
    stereographic projection from its north pole.
    """

    kind: ChartKind
    pole_guard: float = POLE_GUARD

    @property
    def nominal_curvature(self) -> float:
        return {
            ChartKind.EUCLIDEAN: 0.0,
            ChartKind.HALF_PLANE: -1.0,
            ChartKind.SPHERE_STEREO: 1.0,
        }[self.kind]

    @property
    def name(self) -> str:
        return self.kind.value

    def factor(self, points: np.ndarray) -> np.ndarray:
        x, y = _as_xy(points)
        if self.kind == ChartKind.EUCLIDEAN:
            return np.ones_like(x)
        if self.kind == ChartKind.HALF_PLANE:
            return 1.0 / y
        return 2.0 / (1.0 + x * x + y * y)

    def log_factor_gradient(self, points: np.ndarray) -> np.ndarray:
        r"""Gradient of :math:`\ln\varphi`, shape ``(m, 2)``."""
        x, y = _as_xy(points)
        if self.kind == ChartKind.EUCLIDEAN:
            return np.zeros((x.shape[0], 2))
        if self.kind == ChartKind.HALF_PLANE:
            return np.stack([np.zeros_like(y), -1.0 / y], axis=1)
        w = 1.0 + x * x + y * y
        return np.stack([-2.0 * x / w, -2.0 * y / w], axis=1)

    def log_factor_hessian(self, points: np.ndarray) -> np.ndarray:
        r"""Hessian of :math:`\ln\varphi`, shape ``(m, 2, 2)``."""
        x, y = _as_xy(points)
        hessian = np.zeros((x.shape[0], 2, 2))
        if self.kind == ChartKind.HALF_PLANE:
            hessian[:, 1, 1] = 1.0 / (y * y)
        elif self.kind == ChartKind.SPHERE_STEREO:
            w = 1.0 + x * x + y * y
            hessian[:, 0, 0] = -2.0 / w + 4.0 * x * x / w**2
            hessian[:, 1, 1] = -2.0 / w + 4.0 * y * y / w**2
            hessian[:, 0, 1] = hessian[:, 1, 0] = 4.0 * x * y / w**2
        return hessian

    def contains(self, points: np.ndarray) -> np.ndarray:
        x, y = _as_xy(points)
        finite = np.isfinite(x) & np.isfinite(y)
        if self.kind == ChartKind.HALF_PLANE:
            return finite & (y > 0.0)
        return finite

    def escape_margin(self, points: np.ndarray) -> np.ndarray:
        """Positive inside the region where geodesics are integrated."""
        x, y = _as_xy(points)
        if self.kind == ChartKind.HALF_PLANE:
            return y - HALF_PLANE_FLOOR
        if self.kind == ChartKind.SPHERE_STEREO:
            return self.pole_guard - np.hypot(x, y)
        return np.ones_like(x)

    def gauss_curvature_at(self, points: np.ndarray) -> np.ndarray:
        x, _ = _as_xy(points)
        return np.full_like(x, self.nominal_curvature)

    def check_domain(self, points: np.ndarray) -> None:
        inside = self.contains(points)
        if not np.all(inside):
            bad = np.atleast_2d(points)[~inside][0]
            raise DomainError(
                "Point ({:.6g}, {:.6g}) lies outside the {} chart".format(
                    bad[0], bad[1], self.name
                )
            )

    def speed(self, points: np.ndarray, d1: np.ndarray) -> np.ndarray:
        """Metric speed of a curve with velocity ``d1``."""
        return self.factor(points) * np.linalg.norm(np.atleast_2d(d1), axis=1)

    def coordinate_velocity(self, point: np.ndarray, v: np.ndarray) -> np.ndarray:
        """Coordinate velocity of the orthonormal-frame vector ``v`` at ``point``."""
        return np.atleast_2d(v) / self.factor(point)[:, None]

    def geodesic_acceleration(self, points: np.ndarray, velocities: np.ndarray) -> np.ndarray:
        g = self.log_factor_gradient(points)
        vx, vy = velocities[:, 0], velocities[:, 1]
        gx, gy = g[:, 0], g[:, 1]
        ax = -gx * (vx * vx - vy * vy) - 2.0 * gy * vx * vy
        ay = -gy * (vy * vy - vx * vx) - 2.0 * gx * vx * vy
        return np.stack([ax, ay], axis=1)

    def geodesic_curvature(
        self, points: np.ndarray, d1: np.ndarray, d2: np.ndarray
    ) -> np.ndarray:
        r"""Geodesic curvature :math:`(\kappa_e - \partial_n \ln\varphi)/\varphi` of a parametrized curve.

        ``n`` is the unit tangent rotated by +90 degrees.
        """
        points, d1, d2 = (np.atleast_2d(a) for a in (points, d1, d2))
        self.check_domain(points)
        v = _regular_speed(d1)
        kappa_e = _cross(d1, d2) / v**3
        normal = np.stack([-d1[:, 1], d1[:, 0]], axis=1) / v[:, None]
        g = self.log_factor_gradient(points)
        return (kappa_e - _dot(normal, g)) / self.factor(points)

    def geodesic_curvature_derivative(
        self, points: np.ndarray, d1: np.ndarray, d2: np.ndarray, d3: np.ndarray
    ) -> Optional[np.ndarray]:
        r"""Arclength derivative :math:`d\kappa/ds` from analytic derivatives up to order three."""
        points, d1, d2, d3 = (np.atleast_2d(a) for a in (points, d1, d2, d3))
        self.check_domain(points)
        v = _regular_speed(d1)
        phi = self.factor(points)
        g = self.log_factor_gradient(points)
        hessian = self.log_factor_hessian(points)

        cross12 = _cross(d1, d2)
        kappa_e = cross12 / v**3
        kappa_e_dot = (_cross(d1, d3) * v**2 - 3.0 * cross12 * _dot(d1, d2)) / v**5
        normal = np.stack([-d1[:, 1], d1[:, 0]], axis=1) / v[:, None]
        h_d1 = np.einsum("ijk,ik->ij", hessian, d1)
        normal_gradient_dot = -kappa_e * _dot(d1, g) + _dot(normal, h_d1)

        kappa = (kappa_e - _dot(normal, g)) / phi
        kappa_dot = (kappa_e_dot - normal_gradient_dot) / phi - kappa * _dot(g, d1)
        return kappa_dot / (phi * v)


def _regular_speed(d1: np.ndarray) -> np.ndarray:
    v = np.linalg.norm(d1, axis=1)
    if np.any(v < REGULARITY_TOL):
        raise RegularityError(
            "Curve velocity {:.3g} is below the regularity tolerance".format(v.min())
        )
    return v


EUCLIDEAN = ConformalChart(ChartKind.EUCLIDEAN)
HALF_PLANE = ConformalChart(ChartKind.HALF_PLANE)
SPHERE_STEREO = ConformalChart(ChartKind.SPHERE_STEREO)


def chart_gauss_curvature(
    chart: ConformalChart, points: np.ndarray, rel_step: float = 1e-3
) -> np.ndarray:
    r"""Gauss curvature :math:`-\Delta(\ln\varphi)/\varphi^2` by central differences.

    The step is ``rel_step / phi`` so it follows the length scale of the metric.
    """
    points = np.atleast_2d(np.asarray(points, dtype=float))
    chart.check_domain(points)
    phi = chart.factor(points)
    h = rel_step / phi
    offsets, weights = np.array([-2, -1, 0, 1, 2]), np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / 12.0
    laplacian = np.zeros(points.shape[0])
    for axis in (0, 1):
        for offset, weight in zip(offsets, weights):
            shifted = points.copy()
            shifted[:, axis] += offset * h
            laplacian += weight * np.log(chart.factor(shifted))
    laplacian /= h * h
    return -laplacian / phi**2


def conformal_geodesic_curvature(
    chart: ConformalChart, curve: "ClosedCurve", t: np.ndarray
) -> np.ndarray:
    """Geodesic curvature of ``curve`` at parameters ``t`` measured in ``chart``."""
    position, d1, d2 = curve.derivatives(t, 2)
    return chart.geodesic_curvature(position, d1, d2)
