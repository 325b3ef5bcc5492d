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
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any, Callable, Dict, List, Optional, Tuple, Union

import numpy as np

from vertexlab.errors import ParameterError
from vertexlab.utils import central_derivative, default_samples

if TYPE_CHECKING:
    from vertexlab.geometry.charts import ConformalChart
    from vertexlab.geometry.revolution import RevolutionSurface
    from vertexlab.maps.deck import QuotientModel

    Ambient = Union[ConformalChart, RevolutionSurface]

Evaluator = Callable[[np.ndarray], np.ndarray]

CLOSURE_PROBES = 16


@dataclass(frozen=True, eq=False)
class ClosedCurve:
    r"""Periodic regular curve in planar coordinates of its ambient chart or surface.

    The curve is closed on its ambient quotient: :math:`\gamma(t + P) = g^p(\gamma(t))` where ``g``
    generates the deck group of ``quotient`` and ``p = deck_power``. With ``deck_power = 0`` the
    curve closes in the cover itself.

    Args:
        period (float): parameter period ``P``.
        evaluator (Evaluator): ``t -> (m, 2)`` positions.
        ambient: :class:`ConformalChart` or :class:`RevolutionSurface` measuring the curve.
        derivative_evaluators (tuple): analytic derivatives of order 1, 2, 3 (any prefix).
        quotient (QuotientModel, optional): deck data of the surface the curve lives on.
        deck_power (int): power of the generator closing one period.
        samples (int): grid size used for profiles and finite differences.
        name (str): label for reports.
        params (dict): construction parameters, echoed into reports.
        kappa_prime_exact (Evaluator, optional): closed form :math:`d\kappa/ds`.
    """

    period: float
    evaluator: Evaluator
    ambient: "Ambient"
    derivative_evaluators: Tuple[Evaluator, ...] = ()
    quotient: Optional["QuotientModel"] = None
    deck_power: int = 0
    samples: int = field(default_factory=default_samples)
    name: str = "curve"
    params: Dict[str, Any] = field(default_factory=dict)
    kappa_prime_exact: Optional[Evaluator] = None

    def __post_init__(self):
        if not self.period > 0.0:
            raise ParameterError("Curve period must be positive, got {}".format(self.period))
        if self.samples < 8:
            raise ParameterError("Curve needs at least 8 samples per period")

    @property
    def step(self) -> float:
        return self.period / self.samples

    def grid(self, n: Optional[int] = None) -> np.ndarray:
        n = self.samples if n is None else n
        return self.period * np.arange(n, dtype=float) / n

    def position(self, t: np.ndarray) -> np.ndarray:
        t = np.atleast_1d(np.asarray(t, dtype=float))
        return np.atleast_2d(np.asarray(self.evaluator(t), dtype=float))

    def derivative(self, t: np.ndarray, order: int) -> np.ndarray:
        if order == 0:
            return self.position(t)
        if len(self.derivative_evaluators) >= order:
            t = np.atleast_1d(np.asarray(t, dtype=float))
            return np.atleast_2d(np.asarray(self.derivative_evaluators[order - 1](t), dtype=float))
        return central_derivative(self.position, t, self.step, order)

    def derivatives(self, t: np.ndarray, order: int) -> List[np.ndarray]:
        """``[position, d1, ..., d_order]`` at ``t``."""
        return [self.derivative(t, k) for k in range(order + 1)]

    @property
    def has_analytic_derivatives(self) -> bool:
        return len(self.derivative_evaluators) >= 3

    def geodesic_curvature(self, t: np.ndarray) -> np.ndarray:
        position, d1, d2 = self.derivatives(t, 2)
        return self.ambient.geodesic_curvature(position, d1, d2)

    def metric_speed(self, t: np.ndarray) -> np.ndarray:
        position, d1 = self.derivatives(t, 1)
        return self.ambient.speed(position, d1)

    def kappa_prime(self, t: np.ndarray) -> np.ndarray:
        r"""Arclength derivative of the geodesic curvature.

        Closed form when available, then the analytic chart formula, otherwise a five point
        stencil on :math:`\kappa` divided by the metric speed.
        """
        t = np.atleast_1d(np.asarray(t, dtype=float))
        if self.kappa_prime_exact is not None:
            return np.asarray(self.kappa_prime_exact(t), dtype=float)
        if self.has_analytic_derivatives:
            value = self.ambient.geodesic_curvature_derivative(*self.derivatives(t, 3))
            if value is not None:
                return value
        kappa_dot = central_derivative(self.geodesic_curvature, t, self.step, 1)
        return kappa_dot / self.metric_speed(t)

    @property
    def orientation(self) -> int:
        """+1 when closing a period preserves orientation, -1 across a glide."""
        if self.quotient is None or self.deck_power == 0:
            return 1
        return self.quotient.generator.orientation(self.deck_power)

    def closure_map(self, points: np.ndarray) -> np.ndarray:
        if self.quotient is None or self.deck_power == 0:
            return np.atleast_2d(points)
        return self.quotient.generator.apply(points, self.deck_power)

    def closure_residual(self, probes: int = CLOSURE_PROBES) -> float:
        t = self.grid(probes)
        expected = self.closure_map(self.position(t))
        return float(np.max(np.linalg.norm(self.position(t + self.period) - expected, axis=1)))

    def length(self, n: Optional[int] = None) -> float:
        """Metric length of one period, trapezoidal on the periodic grid."""
        t = self.grid(n)
        return float(np.mean(self.metric_speed(t)) * self.period)

    def cover(self, multiplicity: int) -> "ClosedCurve":
        """The same lift run over ``multiplicity`` periods."""
        if multiplicity < 1:
            raise ParameterError("Cover multiplicity must be at least 1")
        return dataclasses.replace(
            self,
            period=self.period * multiplicity,
            deck_power=self.deck_power * multiplicity,
            samples=self.samples * multiplicity,
            name="{}x{}".format(self.name, multiplicity) if multiplicity > 1 else self.name,
        )

    def with_samples(self, samples: int) -> "ClosedCurve":
        return dataclasses.replace(self, samples=int(samples))

    def with_ambient(self, ambient: "Ambient") -> "ClosedCurve":
        # closed forms are tied to the metric they were derived in
        return dataclasses.replace(self, ambient=ambient, kappa_prime_exact=None)

    def without_derivatives(self) -> "ClosedCurve":
        """Copy that only carries positions, so every derivative is differenced."""
        return dataclasses.replace(self, derivative_evaluators=(), kappa_prime_exact=None)

    def describe(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "ambient": getattr(self.ambient, "name", type(self.ambient).__name__),
            "period": self.period,
            "deck": None
            if self.quotient is None
            else self.quotient.generator.describe(),
            "deck_power": self.deck_power,
            "params": dict(self.params),
        }
