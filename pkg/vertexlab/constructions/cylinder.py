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
from typing import List, Optional

import numpy as np

from vertexlab.constructions.families import Formula
from vertexlab.curves.curve import ClosedCurve
from vertexlab.errors import DomainError, ParameterError
from vertexlab.geometry.charts import EUCLIDEAN
from vertexlab.geometry.revolution import RevolutionSurface, arclength_surface
from vertexlab.maps.deck import DeckKind, DeckMotion, QuotientModel
from vertexlab.maps.mobius import MobiusMap, mobius_apply
from vertexlab.maps.transfer import halfplane_inclusion_transfer
from vertexlab.utils import default_samples

DEFAULT_A = 0.09
POLAR_PERIOD = 5.0 * np.pi
DENOMINATOR_GUARD = 1e-6
# Width of the cylinder strip relative to the horizontal extent of the curve.
STRIP_FACTOR = 2.0


def kappa_prime_formula(theta: np.ndarray) -> np.ndarray:
    r"""Derivative in :math:`\theta` of the curvature of the polar curve :math:`r = \cos(\theta/5)`,

    .. math::
        \frac{24 (8 + 6\cos(2\theta/5)) \sin(2\theta/5)}{(13 + 12\cos(2\theta/5))^{5/2}}.
    """
    theta = np.asarray(theta, dtype=float)
    c, s = np.cos(2.0 * theta / 5.0), np.sin(2.0 * theta / 5.0)
    return 24.0 * (8.0 + 6.0 * c) * s / (13.0 + 12.0 * c) ** 2.5


def polar_speed(theta: np.ndarray) -> np.ndarray:
    theta = np.asarray(theta, dtype=float)
    return np.sqrt(13.0 + 12.0 * np.cos(2.0 * theta / 5.0)) / 5.0


def polar_cos5_curve(samples: Optional[int] = None) -> ClosedCurve:
    r"""Polar curve :math:`r(\theta) = \cos(\theta/5)` over :math:`[0, 5\pi)`.

    As a complex curve it is :math:`\tfrac12(e^{6i\theta/5} + e^{4i\theta/5})`, which gives exact
    derivatives of every order.
    """

    def derivative(order):
        def evaluate(theta):
            theta = np.atleast_1d(np.asarray(theta, dtype=float))
            z = 0.5 * (
                (1.2j) ** order * np.exp(1.2j * theta) + (0.8j) ** order * np.exp(0.8j * theta)
            )
            return np.stack([z.real, z.imag], axis=1)

        return evaluate

    return ClosedCurve(
        period=POLAR_PERIOD,
        evaluator=derivative(0),
        ambient=EUCLIDEAN,
        derivative_evaluators=(derivative(1), derivative(2), derivative(3)),
        samples=default_samples() if samples is None else int(samples),
        name="polar-cos5",
        kappa_prime_exact=lambda theta: kappa_prime_formula(theta) / polar_speed(theta),
    )


def _inverting_map(a: float) -> MobiusMap:
    # translate right by a, then invert in the unit circle
    return MobiusMap.inversion().compose(MobiusMap.translation(a))


def cylinder_curve_denominator(a: float, t: np.ndarray) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    c5 = np.cos(t / 5.0)
    return a**2 + 2.0 * a * c5 * np.cos(t) + c5**2


def cylinder_curve_formula(a: float = DEFAULT_A) -> Formula:
    r"""The two vertex curve written out,

    .. math::
        \gamma(t) = \frac{(a + \cos(t/5)\cos t,\ \cos(t/5)\sin t)}{a^2 + 2a\cos(t/5)\cos t + \cos^2(t/5)}.
    """

    def position(t):
        t = np.atleast_1d(np.asarray(t, dtype=float))
        c5 = np.cos(t / 5.0)
        denominator = cylinder_curve_denominator(a, t)
        return np.stack([(a + c5 * np.cos(t)) / denominator, c5 * np.sin(t) / denominator], axis=1)

    return position


def two_vertex_cylinder_curve(
    a: float = DEFAULT_A, L: Optional[float] = None, samples: Optional[int] = None
) -> ClosedCurve:
    r"""Closed curve with exactly two vertices on a flat cylinder.

    It is the image of :math:`r = \cos(\theta/5)` under :math:`z \mapsto 1/\overline{(z + a)}`,
    so inverting and translating back by ``a`` recovers the polar curve. The curve closes after
    :math:`5\pi`; ``L`` is the circumference of the cylinder and defaults to twice the
    horizontal extent of the curve.

    Raises:
        ParameterError: ``a <= 0`` or the denominator comes within ``1e-6`` of zero.
    """
    if not a > 0.0:
        raise ParameterError("a must be positive, got {}".format(a))
    polar = polar_cos5_curve(samples)
    grid = polar.grid(max(polar.samples, 8192))
    smallest = float(np.min(cylinder_curve_denominator(a, grid)))
    if smallest <= DENOMINATOR_GUARD:
        raise ParameterError("Denominator of the cylinder curve vanishes for a = {}".format(a))
    curve = mobius_apply(_inverting_map(a), polar)
    if L is None:
        x = curve.position(grid)[:, 0]
        L = STRIP_FACTOR * float(x.max() - x.min())
    return dataclasses.replace(
        curve,
        quotient=QuotientModel(EUCLIDEAN, DeckMotion(DeckKind.EUCL_TRANSLATION, L)),
        name="cyl2v",
        params={"a": a, "L": L},
    )


def polar_from_cylinder_curve(curve: ClosedCurve, a: float = DEFAULT_A) -> ClosedCurve:
    """Invert the cylinder curve in the unit circle and translate it left by ``a``."""
    closed = dataclasses.replace(curve, quotient=None)
    back = MobiusMap.translation(-a).compose(MobiusMap.inversion())
    return mobius_apply(back, closed)


def rescaled_hyperbolic_copies(
    a: float = DEFAULT_A, L: float = 3.0, height: Optional[float] = None, copies: int = 3
) -> List[ClosedCurve]:
    r"""The cylinder curve centred over the imaginary axis at ``height``, read in the hyperbolic
    half-plane, and its images under :math:`p \mapsto e^{kL} p` for ``k < copies``.

    Raises:
        DomainError: the placed curve does not stay in the upper half-plane.
    """
    if copies < 1:
        raise ParameterError("At least one copy is needed")
    if not L > 0.0:
        raise ParameterError("L must be positive, got {}".format(L))
    planar = dataclasses.replace(two_vertex_cylinder_curve(a), quotient=None)
    points = planar.position(planar.grid(8192))
    center_x = 0.5 * float(points[:, 0].max() + points[:, 0].min())
    if height is None:
        height = 2.0 * float(np.abs(points[:, 1]).max())
    placed = mobius_apply(MobiusMap.translation(complex(-center_x, height)), planar)
    if float(np.min(placed.position(placed.grid(8192))[:, 1])) <= 0.0:
        raise DomainError("Height {} does not lift the curve into the half-plane".format(height))
    base = halfplane_inclusion_transfer(placed)
    out = []
    for k in range(copies):
        copy = mobius_apply(MobiusMap.scaling(float(np.exp(k * L))), base)
        out.append(
            dataclasses.replace(
                copy,
                name="hyp-cyl2v[{}]".format(k),
                params={"a": a, "L": L, "height": height, "copy": k},
            )
        )
    return out


def cusp_surface(depth: float, interval: tuple) -> RevolutionSurface:
    r"""Pseudosphere end with meridian length :math:`2\pi` at :math:`\sigma = 0`, profile
    :math:`r(\sigma) = \exp(-\sigma e^{-\text{depth}})` by arclength, curvature :math:`-e^{-2\,\text{depth}}`.
    """
    rate = float(np.exp(-depth))
    return arclength_surface(
        r=lambda s: np.exp(-rate * np.asarray(s, dtype=float)),
        r1=lambda s: -rate * np.exp(-rate * np.asarray(s, dtype=float)),
        r2=lambda s: rate**2 * np.exp(-rate * np.asarray(s, dtype=float)),
        interval=interval,
        name="cusp",
        depth=depth,
    )


def cusp_transplant(a: float = DEFAULT_A, depth: float = 8.0) -> ClosedCurve:
    r"""The cylinder curve wrapped onto a deep cusp.

    The curve is scaled so its cylinder strip becomes the full turn :math:`\theta \in [0, 2\pi)`
    and is read in the coordinates :math:`(\theta, \sigma)` of :func:`cusp_surface`. For a large
    ``depth`` the cusp is close to the round cylinder and the curve keeps its two vertices.
    """
    cylinder_curve = two_vertex_cylinder_curve(a)
    scale = 2.0 * np.pi / cylinder_curve.quotient.generator.L
    points = cylinder_curve.position(cylinder_curve.grid(8192))
    sigma = scale * points[:, 1]
    surface = cusp_surface(depth, (float(sigma.min()) - 1.0, float(sigma.max()) + 1.0))

    def scaled(order):
        return lambda t: scale * cylinder_curve.derivative(t, order)

    return dataclasses.replace(
        cylinder_curve,
        evaluator=scaled(0),
        derivative_evaluators=(scaled(1), scaled(2), scaled(3)),
        ambient=surface,
        quotient=QuotientModel(surface, DeckMotion(DeckKind.EUCL_TRANSLATION, 2.0 * np.pi)),
        kappa_prime_exact=None,
        name="cusp-cyl2v",
        params={"a": a, "depth": depth},
    )
