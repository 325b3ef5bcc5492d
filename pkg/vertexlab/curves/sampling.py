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

from typing import Any, Dict, Optional, Sequence

import numpy as np

from vertexlab.curves.curve import ClosedCurve
from vertexlab.errors import GenerationError, ParameterError
from vertexlab.geometry.charts import EUCLIDEAN, SPHERE_STEREO
from vertexlab.maps.simplicity import quotient_simplicity_check
from vertexlab.utils import TrigonometricSeries, default_samples
from vertexlab.vllogging import logging

MAX_TRIES = 1000
# Size of the higher harmonics relative to the unit ellipse axis.
HARMONIC_SCALE = 0.3
# Minimum speed relative to the mean speed accepted from a random series.
SPEED_FLOOR = 0.05
INTERPOLATION_SAMPLES = 1024
NEWTON_STEPS = 50


def trigonometric_curve(
    series: TrigonometricSeries,
    ambient: Any = EUCLIDEAN,
    name: str = "trigonometric",
    params: Optional[Dict[str, Any]] = None,
    samples: Optional[int] = None,
) -> ClosedCurve:
    """Closed curve whose position is a vector trigonometric series, with exact derivatives."""
    return ClosedCurve(
        period=series.period,
        evaluator=series,
        ambient=ambient,
        derivative_evaluators=(
            lambda t: series(t, 1),
            lambda t: series(t, 2),
            lambda t: series(t, 3),
        ),
        samples=default_samples() if samples is None else int(samples),
        name=name,
        params=dict(params or {}),
    )


def fourier_curve(
    cosines: Sequence[Sequence[float]],
    sines: Sequence[Sequence[float]],
    center: Sequence[float] = (0.0, 0.0),
    ambient: Any = EUCLIDEAN,
    name: str = "fourier",
    samples: Optional[int] = None,
) -> ClosedCurve:
    r"""Curve :math:`c + \sum_{k \ge 1} A_k \cos kt + B_k \sin kt` of period :math:`2\pi`.

    ``cosines[k - 1]`` and ``sines[k - 1]`` are the planar vectors :math:`A_k` and :math:`B_k`.
    """
    cosines = np.asarray(cosines, dtype=float).reshape(-1, 2)
    sines = np.asarray(sines, dtype=float).reshape(-1, 2)
    if cosines.shape != sines.shape:
        raise ParameterError("Cosine and sine coefficients must have the same shape")
    m = cosines.shape[0]
    frequencies = np.arange(m + 1, dtype=float)
    coefficients = np.zeros((m + 1, 2), dtype=complex)
    coefficients[0] = np.asarray(center, dtype=float)
    coefficients[1:] = cosines - 1j * sines
    series = TrigonometricSeries(frequencies, coefficients, 2.0 * np.pi)
    return trigonometric_curve(
        series,
        ambient=ambient,
        name=name,
        params={"cosines": cosines.tolist(), "sines": sines.tolist(), "center": list(center)},
        samples=samples,
    )


def ellipse(a: float = 2.0, b: float = 1.0, center: Sequence[float] = (0.0, 0.0), **kwargs) -> ClosedCurve:
    """The ellipse ``(a cos t, b sin t)`` about ``center``."""
    kwargs.setdefault("name", "ellipse")
    return fourier_curve([[a, 0.0]], [[0.0, b]], center=center, **kwargs)


def _regular_enough(curve: ClosedCurve) -> bool:
    t = curve.grid(512)
    speed = np.linalg.norm(curve.derivative(t, 1), axis=1)
    return bool(speed.min() > SPEED_FLOOR * speed.mean())


def random_simple_closed_curve(
    seed: int,
    harmonics: int = 6,
    decay: float = 0.5,
    center: Sequence[float] = (0.0, 0.0),
    max_tries: int = MAX_TRIES,
    samples: Optional[int] = None,
) -> ClosedCurve:
    r"""Seeded random simple closed curve in the Euclidean plane.

    The first harmonic is an ellipse with axes ``a`` in ``[1.2, 2)`` and ``1``; harmonic ``k`` gets
    uniform coefficients scaled by ``decay ** (k - 1)``. Candidates are rejected until the polyline
    simplicity check passes, so the curve for a given seed is always the same.

    Args:
        seed (int): seed of ``numpy.random.default_rng``.
        harmonics (int): number of harmonics ``m >= 2``.
        decay (float): geometric decay of the harmonic amplitudes.
        center (Sequence[float]): constant term.
        max_tries (int): rejection budget.
    Raises:
        GenerationError: no simple candidate within ``max_tries``.
    """
    if harmonics < 2:
        raise ParameterError("Random curves need at least 2 harmonics, got {}".format(harmonics))
    if decay < 0.0:
        raise ParameterError("Harmonic decay must be nonnegative")
    rng = np.random.default_rng(seed)
    for attempt in range(max_tries):
        a = 1.0 + rng.uniform(0.2, 1.0)
        cosines = np.zeros((harmonics, 2))
        sines = np.zeros((harmonics, 2))
        cosines[0] = (a, 0.0)
        sines[0] = (0.0, 1.0)
        scale = HARMONIC_SCALE * decay ** np.arange(1, harmonics)
        cosines[1:] = rng.uniform(-1.0, 1.0, size=(harmonics - 1, 2)) * scale[:, None]
        sines[1:] = rng.uniform(-1.0, 1.0, size=(harmonics - 1, 2)) * scale[:, None]
        curve = fourier_curve(
            cosines, sines, center=center, name="random-{}".format(seed), samples=samples
        )
        if not _regular_enough(curve):
            continue
        if quotient_simplicity_check(curve).simple:
            if attempt:
                logging.debug("Random curve", "seed={} accepted after {} rejections".format(seed, attempt))
            params = dict(curve.params, seed=int(seed), harmonics=int(harmonics), decay=float(decay))
            return ClosedCurve(
                period=curve.period,
                evaluator=curve.evaluator,
                ambient=curve.ambient,
                derivative_evaluators=curve.derivative_evaluators,
                samples=curve.samples,
                name=curve.name,
                params=params,
            )
    raise GenerationError(
        "No simple curve for seed {} within {} tries".format(seed, max_tries)
    )


def _antipodal_sphere_points(t: np.ndarray, cosines: np.ndarray, sines: np.ndarray, amplitude: float):
    points = np.stack([np.cos(t), np.sin(t), np.zeros_like(t)], axis=1)
    for j, k in enumerate(range(3, 2 * cosines.shape[0] + 3, 2)):
        points = points + amplitude * (
            np.outer(np.cos(k * t), cosines[j]) + np.outer(np.sin(k * t), sines[j])
        ) / k**2
    points /= np.linalg.norm(points, axis=1)[:, None]
    return points[:, :2] / (1.0 - points[:, 2])[:, None]


def random_antipodal_sphere_curve(
    seed: int,
    harmonics: int = 3,
    amplitude: float = 0.2,
    max_tries: int = MAX_TRIES,
    samples: Optional[int] = None,
) -> ClosedCurve:
    r"""Seeded simple sphere curve symmetric under the antipodal map, in stereographic coordinates.

    A great circle is perturbed by ``harmonics`` odd harmonics (orders 3, 5, ...) with random
    vector coefficients in space, pushed back to the unit sphere and projected from the north
    pole. Odd harmonics give :math:`F(t + \pi) = -F(t)`, so the planar image is invariant under
    :math:`p \mapsto -p/|p|^2`.
    """
    if harmonics < 1:
        raise ParameterError("Antipodal curves need at least one odd harmonic")
    if not 0.0 <= amplitude < 1.0:
        raise ParameterError("Amplitude must lie in [0, 1), got {}".format(amplitude))
    rng = np.random.default_rng(seed)
    grid = 2.0 * np.pi * np.arange(INTERPOLATION_SAMPLES) / INTERPOLATION_SAMPLES
    for _ in range(max_tries):
        cosines = rng.normal(size=(harmonics, 3))
        sines = rng.normal(size=(harmonics, 3))
        points = _antipodal_sphere_points(grid, cosines, sines, amplitude)
        series = TrigonometricSeries.interpolate(points, 2.0 * np.pi, cutoff=1e-15)
        curve = trigonometric_curve(
            series,
            ambient=SPHERE_STEREO,
            name="antipodal-{}".format(seed),
            params={"seed": int(seed), "harmonics": int(harmonics), "amplitude": float(amplitude)},
            samples=samples,
        )
        if _regular_enough(curve) and quotient_simplicity_check(curve).simple:
            return curve
    raise GenerationError(
        "No simple antipodal curve for seed {} within {} tries".format(seed, max_tries)
    )


def resample_by_arclength(curve: ClosedCurve, n: int = INTERPOLATION_SAMPLES) -> ClosedCurve:
    r"""Reparametrize ``curve`` proportionally to metric arclength, keeping its period.

    The new parameter ``u`` satisfies :math:`s(\tau(u)) = u \cdot \mathrm{Len} / P`. The periodic
    part of :math:`\tau(u) - u` is found by Newton iteration on ``n`` grid points and interpolated
    trigonometrically, and derivatives follow from the chain rule.
    """
    if n < 16:
        raise ParameterError("Arclength resampling needs at least 16 points")
    period = curve.period
    grid = curve.grid(n)
    speed = TrigonometricSeries.interpolate(curve.metric_speed(grid), period, cutoff=1e-15)
    mean = float(np.real(speed.coefficients[0, 0]))
    nonzero = speed.frequencies != 0.0
    drift = TrigonometricSeries(
        speed.frequencies[nonzero],
        speed.coefficients[nonzero, 0] / (1j * speed.frequencies[nonzero]),
        period,
    )

    def arclength(tau):
        return mean * tau + drift(tau) - drift(np.zeros(1))[0]

    tau = grid.copy()
    target = mean * grid
    for _ in range(NEWTON_STEPS):
        update = (arclength(tau) - target) / curve.metric_speed(tau)
        tau = tau - update
        if float(np.max(np.abs(update))) < 1e-14 * period:
            break
    offset = TrigonometricSeries.interpolate(tau - grid, period, cutoff=1e-15)

    def reparam(u, order):
        u = np.atleast_1d(np.asarray(u, dtype=float))
        if order == 0:
            return u + offset(u)
        value = offset(u, order)
        return value + 1.0 if order == 1 else value

    def position(u):
        return curve.position(reparam(u, 0))

    def first(u):
        return curve.derivative(reparam(u, 0), 1) * reparam(u, 1)[:, None]

    def second(u):
        tau_u = reparam(u, 0)
        d1, d2 = curve.derivative(tau_u, 1), curve.derivative(tau_u, 2)
        t1, t2 = reparam(u, 1)[:, None], reparam(u, 2)[:, None]
        return d2 * t1**2 + d1 * t2

    def third(u):
        tau_u = reparam(u, 0)
        d1, d2, d3 = (curve.derivative(tau_u, k) for k in (1, 2, 3))
        t1, t2, t3 = (reparam(u, k)[:, None] for k in (1, 2, 3))
        return d3 * t1**3 + 3.0 * d2 * t1 * t2 + d1 * t3

    return ClosedCurve(
        period=period,
        evaluator=position,
        ambient=curve.ambient,
        derivative_evaluators=(first, second, third),
        quotient=curve.quotient,
        deck_power=curve.deck_power,
        samples=curve.samples,
        name="{}-arclength".format(curve.name),
        params=dict(curve.params),
    )
