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

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Callable, Optional, Tuple

import numpy as np
from scipy.integrate import quad

from vertexlab.errors import DomainError, ParameterError, RegularityError
from vertexlab.geometry.charts import REGULARITY_TOL

if TYPE_CHECKING:
    from vertexlab.curves.curve import ClosedCurve

Profile = Callable[[np.ndarray], np.ndarray]

NECK_TOL = 1e-10


def _constant(value: float) -> Profile:
    return lambda t: np.full_like(np.asarray(t, dtype=float), value)


@dataclass(frozen=True, eq=False)
class RevolutionSurface:
    r"""Surface of revolution :math:`X(t, \theta) = (r(t)\cos\theta, r(t)\sin\theta, h(t))`.

    Curves on the surface use planar coordinates ``(x, y) = (theta, t)``, so the meridian
    direction is vertical and the rotation :math:`\theta \mapsto \theta + 2\pi` is a horizontal
    translation. The metric is :math:`E(t)\,dt^2 + r(t)^2 d\theta^2` with :math:`E = r'^2 + h'^2`.

    Args:
        r, r1, r2 (Profile): radius and its first two derivatives.
        h1, h2 (Profile): first two derivatives of the height.
        interval (Tuple[float, float]): parameter interval of ``t``.
        normalized (bool): ``h(t) = t``.
        arclength (bool): the profile is parametrized by arclength, ``E = 1``.
        name (str): label used in reports.
    """

    r: Profile
    r1: Profile
    r2: Profile
    h1: Profile
    h2: Profile
    interval: Tuple[float, float]
    normalized: bool = False
    arclength: bool = False
    name: str = "revolution"
    params: dict = field(default_factory=dict)

    @property
    def nominal_curvature(self) -> Optional[float]:
        return None

    def contains_parameter(self, t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        a, b = self.interval
        return np.isfinite(t) & (t >= a) & (t <= b)

    def contains(self, points: np.ndarray) -> np.ndarray:
        points = np.atleast_2d(np.asarray(points, dtype=float))
        return np.isfinite(points[:, 0]) & self.contains_parameter(points[:, 1])

    def check_domain(self, points: np.ndarray) -> None:
        inside = self.contains(points)
        if not np.all(inside):
            bad = np.atleast_2d(points)[~inside][0]
            raise DomainError(
                "Parameter t={:.6g} is outside the surface interval [{:.6g}, {:.6g}]".format(
                    bad[1], *self.interval
                )
            )

    def escape_margin(self, points: np.ndarray) -> np.ndarray:
        t = np.atleast_2d(points)[:, 1]
        a, b = self.interval
        return np.minimum(t - a, b - t)

    def metric_E(self, t: np.ndarray) -> np.ndarray:
        return self.r1(t) ** 2 + self.h1(t) ** 2

    def height(self, t: np.ndarray) -> np.ndarray:
        t = np.atleast_1d(np.asarray(t, dtype=float))
        if self.normalized:
            return t.copy()
        return np.array([quad(self.h1, 0.0, float(s))[0] for s in t])

    def embedding(self, points: np.ndarray) -> np.ndarray:
        """Points of :math:`\\mathbb{R}^3` for planar coordinates ``(theta, t)``."""
        points = np.atleast_2d(np.asarray(points, dtype=float))
        theta, t = points[:, 0], points[:, 1]
        r = self.r(t)
        return np.stack([r * np.cos(theta), r * np.sin(theta), self.height(t)], axis=1)

    def gauss_curvature(self, t: np.ndarray) -> np.ndarray:
        r"""Gauss curvature from the fundamental forms, :math:`h'(r'h'' - r''h')/(r E^2)`."""
        t = np.atleast_1d(np.asarray(t, dtype=float))
        if not np.all(self.contains_parameter(t)):
            raise DomainError("Parameter outside the surface interval {}".format(self.interval))
        r, r1, r2, h1, h2 = self.r(t), self.r1(t), self.r2(t), self.h1(t), self.h2(t)
        e = r1**2 + h1**2
        return h1 * (r1 * h2 - r2 * h1) / (r * e**2)

    def gauss_curvature_at(self, points: np.ndarray) -> np.ndarray:
        return self.gauss_curvature(np.atleast_2d(points)[:, 1])

    def has_neck_at(self, t0: float = 0.0, tol: float = NECK_TOL) -> bool:
        return bool(abs(float(self.r1(np.array([t0]))[0])) < tol)

    def speed(self, points: np.ndarray, d1: np.ndarray) -> np.ndarray:
        points, d1 = np.atleast_2d(points), np.atleast_2d(d1)
        t = points[:, 1]
        return np.sqrt(self.metric_E(t) * d1[:, 1] ** 2 + self.r(t) ** 2 * d1[:, 0] ** 2)

    def coordinate_velocity(self, point: np.ndarray, v: np.ndarray) -> np.ndarray:
        point, v = np.atleast_2d(point), np.atleast_2d(v)
        t = point[:, 1]
        return np.stack([v[:, 0] / self.r(t), v[:, 1] / np.sqrt(self.metric_E(t))], axis=1)

    def christoffel(self, t: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        r"""(:math:`\Gamma^t_{tt}`, :math:`\Gamma^t_{\theta\theta}`, :math:`\Gamma^\theta_{t\theta}`)."""
        r, r1, r2, h1, h2 = self.r(t), self.r1(t), self.r2(t), self.h1(t), self.h2(t)
        e = r1**2 + h1**2
        return (r1 * r2 + h1 * h2) / e, -r * r1 / e, r1 / r

    def geodesic_acceleration(self, points: np.ndarray, velocities: np.ndarray) -> np.ndarray:
        t = points[:, 1]
        g_ttt, g_tthth, g_thtth = self.christoffel(t)
        theta_dot, t_dot = velocities[:, 0], velocities[:, 1]
        t_acc = -g_ttt * t_dot**2 - g_tthth * theta_dot**2
        theta_acc = -2.0 * g_thtth * t_dot * theta_dot
        return np.stack([theta_acc, t_acc], axis=1)

    def geodesic_curvature(
        self, points: np.ndarray, d1: np.ndarray, d2: np.ndarray
    ) -> np.ndarray:
        r"""Geodesic curvature :math:`\langle c'', \nu \rangle / \|c'\|^3` of the space curve
        :math:`c = X(t(u), \theta(u))`, with :math:`\nu = n \times c'/\|c'\|` and
        :math:`n` the unit normal along :math:`X_t \times X_\theta`.
        """
        points, d1, d2 = (np.atleast_2d(a) for a in (points, d1, d2))
        self.check_domain(points)
        theta, t = points[:, 0], points[:, 1]
        theta1, t1 = d1[:, 0], d1[:, 1]
        theta2, t2 = d2[:, 0], d2[:, 1]
        r, r1, r2, h1, h2 = self.r(t), self.r1(t), self.r2(t), self.h1(t), self.h2(t)
        c, s, z = np.cos(theta), np.sin(theta), np.zeros_like(t)

        x_t = np.stack([r1 * c, r1 * s, h1], axis=1)
        x_th = np.stack([-r * s, r * c, z], axis=1)
        x_tt = np.stack([r2 * c, r2 * s, h2], axis=1)
        x_tth = np.stack([-r1 * s, r1 * c, z], axis=1)
        x_thth = np.stack([-r * c, -r * s, z], axis=1)

        velocity = x_t * t1[:, None] + x_th * theta1[:, None]
        acceleration = (
            x_tt * (t1**2)[:, None]
            + 2.0 * x_tth * (t1 * theta1)[:, None]
            + x_thth * (theta1**2)[:, None]
            + x_t * t2[:, None]
            + x_th * theta2[:, None]
        )
        normal = np.cross(x_t, x_th)
        normal /= np.linalg.norm(normal, axis=1)[:, None]
        speed = np.linalg.norm(velocity, axis=1)
        if np.any(speed < REGULARITY_TOL):
            raise RegularityError(
                "Curve velocity {:.3g} is below the regularity tolerance".format(speed.min())
            )
        binormal = np.cross(normal, velocity)
        return np.einsum("ij,ij->i", acceleration, binormal) / speed**3

    def geodesic_curvature_derivative(self, points, d1, d2, d3) -> None:
        # no closed form, callers difference the curvature along the curve
        return None


def intrinsic_geodesic_curvature(
    surface: RevolutionSurface, points: np.ndarray, d1: np.ndarray, d2: np.ndarray
) -> np.ndarray:
    r"""Geodesic curvature from the Christoffel symbols of :math:`E\,dt^2 + r^2 d\theta^2`,

    .. math::
        \kappa = \sqrt{EG}\,\frac{t' A^\theta - \theta' A^t}{(E t'^2 + G \theta'^2)^{3/2}},
        \quad A^t = t'' + \Gamma^t_{tt} t'^2 + \Gamma^t_{\theta\theta}\theta'^2,
        \quad A^\theta = \theta'' + 2\Gamma^\theta_{t\theta} t'\theta'.
    """
    points, d1, d2 = (np.atleast_2d(a) for a in (points, d1, d2))
    surface.check_domain(points)
    t = points[:, 1]
    theta1, t1 = d1[:, 0], d1[:, 1]
    theta2, t2 = d2[:, 0], d2[:, 1]
    e, g = surface.metric_E(t), surface.r(t) ** 2
    g_ttt, g_tthth, g_thtth = surface.christoffel(t)
    a_t = t2 + g_ttt * t1**2 + g_tthth * theta1**2
    a_theta = theta2 + 2.0 * g_thtth * t1 * theta1
    return np.sqrt(e * g) * (t1 * a_theta - theta1 * a_t) / (e * t1**2 + g * theta1**2) ** 1.5


def revolution_geodesic_curvature(
    surface: RevolutionSurface, curve: "ClosedCurve", u: np.ndarray
) -> np.ndarray:
    """Geodesic curvature of a path ``u -> (theta(u), t(u))`` on ``surface``."""
    position, d1, d2 = curve.derivatives(u, 2)
    return surface.geodesic_curvature(position, d1, d2)


def gauss_curvature_revolution(surface: RevolutionSurface, t: np.ndarray) -> np.ndarray:
    """Gauss curvature of ``surface`` along the parallels ``t``."""
    t = np.atleast_1d(np.asarray(t, dtype=float))
    if np.any(surface.r(t) <= 0.0):
        raise DomainError("Profile radius must be positive")
    return surface.gauss_curvature(t)


def arclength_gauss_curvature(surface: RevolutionSurface, t: np.ndarray) -> np.ndarray:
    """``-r''/r``, valid for profiles parametrized by arclength."""
    if not surface.arclength:
        raise ParameterError("-r''/r only holds for arclength profiles")
    t = np.atleast_1d(np.asarray(t, dtype=float))
    return -surface.r2(t) / surface.r(t)


def neck_closed_form_curvature(
    surface: RevolutionSurface, lam: float, theta: np.ndarray
) -> np.ndarray:
    r"""Closed form geodesic curvature of the neck perturbation :math:`\theta \mapsto X(\lambda\cos\theta, \theta)`
    on a normalized surface (``h(t) = t``), evaluated with :math:`\bar r = r(\lambda\cos\theta)`.
    """
    if not surface.normalized:
        raise ParameterError("The closed form needs a normalized profile with h(t) = t")
    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    t = lam * np.cos(theta)
    if not np.all(surface.contains_parameter(t)):
        raise DomainError("Perturbation leaves the surface interval {}".format(surface.interval))
    r, r1, r2 = surface.r(t), surface.r1(t), surface.r2(t)
    sin2 = np.sin(theta) ** 2
    cos = np.cos(theta)
    e = r1**2 + 1.0
    numerator = (
        r1 * r**2
        + lam * r * (-lam * r1 * r2 * sin2 + cos * r1**2 + cos)
        + 2.0 * lam**2 * sin2 * r1 * e
    )
    return numerator / (np.sqrt(e) * (r**2 + lam**2 * sin2 * e) ** 1.5)


def normalized_surface(
    r: Profile,
    r1: Profile,
    r2: Profile,
    interval: Tuple[float, float],
    name: str = "normalized",
    **params,
) -> RevolutionSurface:
    """Surface with height ``h(t) = t``."""
    return RevolutionSurface(
        r=r,
        r1=r1,
        r2=r2,
        h1=_constant(1.0),
        h2=_constant(0.0),
        interval=interval,
        normalized=True,
        name=name,
        params=params,
    )


def arclength_surface(
    r: Profile,
    r1: Profile,
    r2: Profile,
    interval: Tuple[float, float],
    name: str = "arclength",
    **params,
) -> RevolutionSurface:
    """Surface whose profile curve is parametrized by arclength, ``r'^2 + h'^2 = 1``."""
    probe = np.linspace(interval[0], interval[1], 257)
    if np.any(np.abs(r1(probe)) >= 1.0):
        raise ParameterError("|r'| must stay below 1 for an arclength profile")

    def h1(t):
        return np.sqrt(1.0 - r1(t) ** 2)

    def h2(t):
        return -r1(t) * r2(t) / h1(t)

    return RevolutionSurface(
        r=r,
        r1=r1,
        r2=r2,
        h1=h1,
        h2=h2,
        interval=interval,
        arclength=True,
        name=name,
        params=params,
    )


def cylinder(radius: float = 1.0, half_height: float = 1.0) -> RevolutionSurface:
    """Round cylinder, both normalized and parametrized by arclength."""
    if radius <= 0.0:
        raise ParameterError("Cylinder radius must be positive")
    return RevolutionSurface(
        r=_constant(radius),
        r1=_constant(0.0),
        r2=_constant(0.0),
        h1=_constant(1.0),
        h2=_constant(0.0),
        interval=(-half_height, half_height),
        normalized=True,
        arclength=True,
        name="cylinder",
        params={"radius": radius},
    )
