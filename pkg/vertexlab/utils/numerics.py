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

from typing import Callable, Optional

import numpy as np
from scipy.optimize import brentq

from vertexlab.vllogging import logging

# Rows evaluated per block when summing a trigonometric series.
_EVAL_BLOCK = 1024

# (offsets, weights, divisor power) of the central stencils.
_STENCILS = {
    1: (np.array([-2, -1, 1, 2]), np.array([1.0, -8.0, 8.0, -1.0]) / 12.0),
    2: (
        np.array([-2, -1, 0, 1, 2]),
        np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / 12.0,
    ),
    3: (
        np.array([-3, -2, -1, 1, 2, 3]),
        np.array([1.0, -8.0, 13.0, -13.0, 8.0, -1.0]) / 8.0,
    ),
}


def central_derivative(
    f: Callable[[np.ndarray], np.ndarray],
    t: np.ndarray,
    h: float,
    order: int = 1,
) -> np.ndarray:
    r"""Central finite difference of ``f`` at ``t``.

    Fourth order accurate for the first and second derivative, second order for the third.
    ``f`` maps a 1-d parameter array to an array whose first axis matches it.

    Args:
        f (Callable): vectorized function.
        t (np.ndarray): evaluation parameters.
        h (float): stencil step.
        order (int): derivative order, 1 to 3.
    Returns:
        np.ndarray: the derivative, shaped like ``f(t)``.
    """
    if order not in _STENCILS:
        raise ValueError("central_derivative supports orders 1-3, got {}".format(order))
    offsets, weights = _STENCILS[order]
    t = np.atleast_1d(np.asarray(t, dtype=float))
    total = None
    for offset, weight in zip(offsets, weights):
        term = weight * np.asarray(f(t + offset * h), dtype=float)
        total = term if total is None else total + term
    return total / h**order


def periodic_grid(period: float, n: int, offset: float = 0.0) -> np.ndarray:
    """``n`` equispaced parameters over ``[offset, offset + period)``."""
    return offset + period * np.arange(n, dtype=float) / n


class TrigonometricSeries:
    r"""Real vector valued trigonometric polynomial

    .. math::
        f(t) = \sum_k \mathrm{Re}\left(c_k e^{i \omega_k t}\right)

    with analytic derivatives of every order. Built either from explicit coefficients or
    by interpolating equispaced periodic samples.
    """

    def __init__(self, frequencies: np.ndarray, coefficients: np.ndarray, period: float):
        self.frequencies = np.asarray(frequencies, dtype=float)
        coefficients = np.asarray(coefficients, dtype=complex)
        self._vector = coefficients.ndim == 2
        self.coefficients = coefficients.reshape(coefficients.shape[0], -1)
        self.period = float(period)

    @classmethod
    def interpolate(
        cls, samples: np.ndarray, period: float, cutoff: float = 1e-16
    ) -> "TrigonometricSeries":
        r"""Trigonometric interpolant of samples taken at ``periodic_grid(period, n)``.

        Coefficients below ``cutoff`` times the largest one are dropped.
        """
        samples = np.asarray(samples, dtype=float)
        n = samples.shape[0]
        spectrum = np.fft.rfft(samples, axis=0) / n
        # one-sided spectrum: double every bin except the mean and the Nyquist bin
        spectrum[1:] *= 2.0
        if n % 2 == 0:
            spectrum[-1] /= 2.0
        k = np.arange(spectrum.shape[0], dtype=float)
        magnitude = np.abs(spectrum.reshape(spectrum.shape[0], -1)).max(axis=1)
        keep = magnitude > cutoff * max(magnitude.max(), np.finfo(float).tiny)
        keep[0] = True
        series = cls(2.0 * np.pi * k[keep] / period, spectrum[keep], period)
        series._vector = samples.ndim == 2
        return series

    def __call__(self, t: np.ndarray, derivative: int = 0) -> np.ndarray:
        t = np.atleast_1d(np.asarray(t, dtype=float))
        weights = self.coefficients * ((1j * self.frequencies) ** derivative)[:, None]
        out = np.empty((t.shape[0], self.coefficients.shape[1]))
        for start in range(0, t.shape[0], _EVAL_BLOCK):
            block = t[start : start + _EVAL_BLOCK]
            phases = np.exp(1j * np.outer(block, self.frequencies))
            out[start : start + _EVAL_BLOCK] = np.real(phases @ weights)
        return out if self._vector else out[:, 0]

    @property
    def harmonics(self) -> int:
        return int(self.frequencies.shape[0])


def refine_root(
    f: Callable[[float], float],
    a: float,
    b: float,
    xtol: float,
    fa: Optional[float] = None,
    fb: Optional[float] = None,
) -> float:
    r"""Root of ``f`` inside a sign-change bracket ``[a, b]``.

    Uses Brent's bracketing method; endpoints whose value is exactly zero are returned as is.
    """
    fa = f(a) if fa is None else fa
    fb = f(b) if fb is None else fb
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if np.sign(fa) != np.sign(fb):
        try:
            return float(brentq(f, a, b, xtol=xtol, rtol=4 * np.finfo(float).eps, maxiter=200))
        except ValueError:
            # grid values bracket a root the refined function does not
            pass
    logging.debug("Root bracket", "no sign change on [{:.17g}, {:.17g}], keeping the midpoint".format(a, b))
    return 0.5 * (a + b)


def cyclic_distance(a: np.ndarray, b: np.ndarray, period: float) -> np.ndarray:
    """Distance between parameters modulo ``period``."""
    d = np.mod(np.asarray(a) - np.asarray(b), period)
    return np.minimum(d, period - d)
