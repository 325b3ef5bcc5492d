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
from typing import Iterator, List, Optional, Tuple

import numpy as np
from scipy.integrate import cumulative_trapezoid

from vertexlab.curves.curve import ClosedCurve
from vertexlab.errors import ParameterError
from vertexlab.vllogging import LEVEL_DEBUG, logging

CSV_HEADER = ("t", "s", "x", "y", "kappa", "kappa_prime")
# Relative tolerance of the kappa' cross-check against differenced kappa.
CONSISTENCY_TOL = 1e-4


@dataclass(frozen=True, eq=False)
class CurvatureProfile:
    r"""Geodesic curvature sampled on a uniform grid over one period.

    ``kappa_prime`` is the derivative with respect to metric arclength ``s``.
    """

    curve: ClosedCurve
    t: np.ndarray
    s: np.ndarray
    position: np.ndarray
    kappa: np.ndarray
    kappa_prime: np.ndarray
    length: float

    @property
    def period(self) -> float:
        return self.curve.period

    @property
    def n(self) -> int:
        return int(self.t.shape[0])

    @property
    def step(self) -> float:
        return self.period / self.n

    def consistency_residual(self) -> float:
        r"""Largest gap between ``kappa_prime`` and :math:`d\kappa/ds` from a periodic central
        difference, relative to the largest ``kappa_prime``. Only meaningful for curves that close
        in the cover.
        """
        if self.curve.deck_power != 0:
            raise ParameterError("Consistency check needs a curve that closes in the cover")
        kappa_dot = (np.roll(self.kappa, -1) - np.roll(self.kappa, 1)) / 2.0
        ds = (np.roll(self.s, -1) - np.roll(self.s, 1)) % self.length / 2.0
        scale = max(float(np.max(np.abs(self.kappa_prime))), np.finfo(float).tiny)
        return float(np.max(np.abs(kappa_dot / ds - self.kappa_prime)) / scale)

    def rows(self) -> Iterator[Tuple[float, ...]]:
        for i in range(self.n):
            yield (
                float(self.t[i]),
                float(self.s[i]),
                float(self.position[i, 0]),
                float(self.position[i, 1]),
                float(self.kappa[i]),
                float(self.kappa_prime[i]),
            )


def curvature_profile(curve: ClosedCurve, n: Optional[int] = None) -> CurvatureProfile:
    r"""Evaluate :math:`\kappa`, :math:`d\kappa/ds` and arclength of ``curve`` on ``n`` grid points.

    Args:
        curve (ClosedCurve): curve with an ambient metric.
        n (int, optional): grid size, defaults to ``curve.samples``.
    Returns:
        CurvatureProfile: profile over ``[0, P)``.
    """
    n = curve.samples if n is None else int(n)
    if n < 8:
        raise ParameterError("A curvature profile needs at least 8 samples")
    t = curve.grid(n)
    t_closed = np.append(t, curve.period)
    position = curve.position(t)
    kappa = curve.geodesic_curvature(t)
    kappa_prime = curve.kappa_prime(t)
    speed = curve.metric_speed(t_closed)
    s_closed = cumulative_trapezoid(speed, t_closed, initial=0.0)
    logging.trace(
        "Curvature profile",
        "{} n={} length={:.10g}".format(curve.name, n, s_closed[-1]),
    )
    profile = CurvatureProfile(
        curve=curve,
        t=t,
        s=s_closed[:-1],
        position=position,
        kappa=kappa,
        kappa_prime=kappa_prime,
        length=float(s_closed[-1]),
    )
    if curve.deck_power == 0 and logging.get_level() <= LEVEL_DEBUG:
        _check_consistency(profile)
    return profile


def _check_consistency(profile: CurvatureProfile):
    # Constant curvature leaves nothing to compare against.
    if np.ptp(profile.kappa) <= 1e-9 * max(1.0, float(np.max(np.abs(profile.kappa)))):
        return
    residual = profile.consistency_residual()
    if residual > CONSISTENCY_TOL:
        logging.warning(
            "Curvature derivative",
            "{} kappa_prime disagrees with differenced kappa by {:.3g} at n={}".format(
                profile.curve.name, residual, profile.n
            ),
        )
    else:
        logging.debug("Curvature derivative", "{} consistent to {:.3g}".format(profile.curve.name, residual))


def profile_to_rows(profile: CurvatureProfile) -> List[Tuple[float, ...]]:
    """Rows in ``CSV_HEADER`` order."""
    return list(profile.rows())
