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

from typing import Optional

import numpy as np

from vertexlab.curves.curve import ClosedCurve
from vertexlab.errors import DomainError, ParameterError
from vertexlab.geometry.geodesics import MetricCircle, metric_circle
from vertexlab.geometry.revolution import (
    RevolutionSurface,
    arclength_surface,
    cylinder,
    normalized_surface,
    revolution_geodesic_curvature,
)
from vertexlab.maps.deck import DeckKind, DeckMotion, QuotientModel
from vertexlab.utils import default_samples
from vertexlab.vllogging import logging

# Fraction of the admissible interval kept when a requested interval is too long.
CLAMP_FRACTION = 0.95
DEFAULT_FRACTION = 0.5
JACKSON_CENTER = np.array([0.0, 0.5])
NECK_PROFILES = ("cylinder", "cos", "cosh")


def _admissible_half_width(K: float, R: float) -> float:
    """Largest ``eps`` keeping ``r > 0`` and ``|r'| < 1`` for the arclength profile of curvature ``K``."""
    if K == 0.0:
        return np.inf
    root = np.sqrt(abs(K))
    if K > 0.0:
        bound = np.pi / (2.0 * root)
        if R * root > 1.0:
            bound = min(bound, np.arcsin(1.0 / (R * root)) / root)
        return float(bound)
    return float(np.arcsinh(1.0 / (R * root)) / root)


def _half_width(requested: Optional[float], bound: float, what: str) -> float:
    if requested is None:
        return 1.0 if np.isinf(bound) else DEFAULT_FRACTION * bound
    if not requested > 0.0:
        raise ParameterError("Interval half width must be positive, got {}".format(requested))
    if requested > CLAMP_FRACTION * bound:
        clamped = CLAMP_FRACTION * bound
        logging.warning(
            "Clamped interval", "{}: eps {:.6g} -> {:.6g}".format(what, requested, clamped)
        )
        return clamped
    return float(requested)


def constant_curvature_profile(K: float, L: float, eps: Optional[float] = None) -> RevolutionSurface:
    r"""Surface of constant curvature ``K`` with a neck of length ``L`` at ``t = 0``.

    The profile is parametrized by arclength with :math:`R = L / 2\pi`:
    :math:`r = R\cos(\sqrt{K} t)` for ``K > 0``, :math:`r = R\cosh(\sqrt{-K} t)` for ``K < 0``
    and the cylinder of radius ``R`` for ``K = 0``. The interval :math:`[-\varepsilon, \varepsilon]`
    is clamped, with a warning, where the radius would vanish or :math:`|r'|` reach 1.
    """
    if not L > 0.0:
        raise ParameterError("Neck length must be positive, got {}".format(L))
    R = L / (2.0 * np.pi)
    eps = _half_width(eps, _admissible_half_width(K, R), "K={}".format(K))
    if K == 0.0:
        return cylinder(R, eps)
    root = np.sqrt(abs(K))
    if K > 0.0:
        r, r1, r2 = (
            lambda t: R * np.cos(root * np.asarray(t, dtype=float)),
            lambda t: -R * root * np.sin(root * np.asarray(t, dtype=float)),
            lambda t: -R * K * np.cos(root * np.asarray(t, dtype=float)),
        )
    else:
        r, r1, r2 = (
            lambda t: R * np.cosh(root * np.asarray(t, dtype=float)),
            lambda t: R * root * np.sinh(root * np.asarray(t, dtype=float)),
            lambda t: -R * K * np.cosh(root * np.asarray(t, dtype=float)),
        )
    return arclength_surface(r, r1, r2, (-eps, eps), name="constant-curvature", K=K, L=L)


def literal_constant_curvature_profile(K: float, L: float, eps: Optional[float] = None) -> RevolutionSurface:
    r"""Arclength profile :math:`r = R\cos(t/K)` (``K > 0``) or :math:`R\cosh(t/K)` (``K < 0``).

    Its Gauss curvature is :math:`1/K^2` (resp. :math:`-1/K^2`), not ``K``; kept to document
    that reading of the profile formula.
    """
    if K == 0.0:
        raise ParameterError("The literal profile is undefined for K = 0")
    if not L > 0.0:
        raise ParameterError("Neck length must be positive, got {}".format(L))
    R = L / (2.0 * np.pi)
    curvature = np.sign(K) / K**2
    eps = _half_width(eps, _admissible_half_width(curvature, R), "literal K={}".format(K))
    if K > 0.0:
        r, r1, r2 = (
            lambda t: R * np.cos(np.asarray(t, dtype=float) / K),
            lambda t: -R / K * np.sin(np.asarray(t, dtype=float) / K),
            lambda t: -R / K**2 * np.cos(np.asarray(t, dtype=float) / K),
        )
    else:
        r, r1, r2 = (
            lambda t: R * np.cosh(np.asarray(t, dtype=float) / K),
            lambda t: R / K * np.sinh(np.asarray(t, dtype=float) / K),
            lambda t: R / K**2 * np.cosh(np.asarray(t, dtype=float) / K),
        )
    return arclength_surface(r, r1, r2, (-eps, eps), name="literal-constant-curvature", K=K, L=L)


def neck_profile(kind: str, eps: float = 0.5) -> RevolutionSurface:
    """Normalized surfaces ``h(t) = t`` with ``r`` in ``1``, ``cos t`` or ``cosh t``."""
    if kind == "cylinder":
        return normalized_surface(
            lambda t: np.ones_like(np.asarray(t, dtype=float)),
            lambda t: np.zeros_like(np.asarray(t, dtype=float)),
            lambda t: np.zeros_like(np.asarray(t, dtype=float)),
            (-eps, eps),
            name="cylinder",
        )
    if kind == "cos":
        if eps >= np.pi / 2.0:
            raise ParameterError("cos profile needs eps < pi/2")
        return normalized_surface(np.cos, lambda t: -np.sin(t), lambda t: -np.cos(t), (-eps, eps), name="cos")
    if kind == "cosh":
        return normalized_surface(np.cosh, np.sinh, np.cosh, (-eps, eps), name="cosh")
    raise ParameterError("Unknown neck profile {!r}, expected one of {}".format(kind, NECK_PROFILES))


def neck_perturbation(surface: RevolutionSurface, lam: float, samples: Optional[int] = None) -> ClosedCurve:
    r"""The path :math:`\theta \mapsto X(\lambda\cos\theta, \theta)`, a curve of period :math:`2\pi`
    closing through the rotation :math:`\theta \mapsto \theta + 2\pi`.

    Raises:
        ParameterError: the surface has no neck at ``t = 0``.
        DomainError: ``|lambda|`` exceeds the parameter interval.
    """
    if not surface.has_neck_at(0.0):
        raise ParameterError("{} has no neck at t = 0".format(surface.name))
    if not (surface.interval[0] < -abs(lam) and abs(lam) < surface.interval[1]):
        raise DomainError("lambda {} leaves the interval {}".format(lam, surface.interval))

    def derivative(order):
        def evaluate(theta):
            theta = np.atleast_1d(np.asarray(theta, dtype=float))
            x = theta if order == 0 else np.full_like(theta, 1.0 if order == 1 else 0.0)
            return np.stack([x, lam * np.cos(theta + order * np.pi / 2.0)], axis=1)

        return evaluate

    return ClosedCurve(
        period=2.0 * np.pi,
        evaluator=derivative(0),
        ambient=surface,
        derivative_evaluators=(derivative(1), derivative(2), derivative(3)),
        quotient=QuotientModel(surface, DeckMotion(DeckKind.EUCL_TRANSLATION, 2.0 * np.pi)),
        deck_power=1,
        samples=default_samples() if samples is None else int(samples),
        name="neck",
        params=dict(surface.params, surface=surface.name, **{"lambda": lam}),
    )


def neck_limit_constant(surface: RevolutionSurface) -> float:
    r"""First order coefficient ``C`` of the neck perturbation, :math:`k_\lambda \approx \lambda C \cos\theta`,

    .. math::
        C = \frac{1 + r(0) r''(0)}{r(0)^2},

    with :math:`r''` taken per unit height so arclength profiles qualify as well.
    """
    if not surface.has_neck_at(0.0):
        raise ParameterError("{} has no neck at t = 0".format(surface.name))
    zero = np.zeros(1)
    r = float(surface.r(zero)[0])
    r2 = float(surface.r2(zero)[0]) / float(surface.h1(zero)[0]) ** 2
    return (1.0 + r * r2) / r**2


def neck_taylor_residual(surface: RevolutionSurface, lam: float, n: int = 256) -> float:
    r""":math:`\max_\theta |k_\lambda(\theta)/\lambda - C\cos\theta|` over ``n`` angles."""
    if not lam > 0.0:
        raise ParameterError("Taylor residual needs lambda > 0")
    curve = neck_perturbation(surface, lam)
    theta = curve.grid(n)
    kappa = revolution_geodesic_curvature(surface, curve, theta)
    return float(np.max(np.abs(kappa / lam - neck_limit_constant(surface) * np.cos(theta))))


def jackson_surface() -> RevolutionSurface:
    r"""Normalized surface :math:`r = 1 + t^2/2` on :math:`[-1, 2]`, whose curvature has nonzero
    gradient at the parallel ``t = 0.5``.
    """
    return normalized_surface(
        lambda t: 1.0 + 0.5 * np.asarray(t, dtype=float) ** 2,
        lambda t: np.asarray(t, dtype=float),
        lambda t: np.ones_like(np.asarray(t, dtype=float)),
        (-1.0, 2.0),
        name="jackson",
    )


def jackson_circle(radius: float, n: int = 256) -> MetricCircle:
    """Metric circle of ``radius`` about ``(theta, t) = (0, 0.5)`` on :func:`jackson_surface`."""
    return metric_circle(jackson_surface(), JACKSON_CENTER, radius, n=n)
