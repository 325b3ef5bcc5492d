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
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, Optional, Union

import numpy as np

from vertexlab.curves.curve import ClosedCurve
from vertexlab.errors import DomainError, ParameterError

Points = np.ndarray
Reparametrization = Callable[[np.ndarray], np.ndarray]


class DeckKind(str, Enum):
    EUCL_TRANSLATION = "translation"
    EUCL_GLIDE = "glide"
    PARABOLIC = "parabolic"
    HYP_TRANSLATION = "hyperbolic-translation"
    HYP_GLIDE = "hyperbolic-glide"


_REVERSING = {DeckKind.EUCL_GLIDE, DeckKind.HYP_GLIDE}
_MULTIPLICATIVE = {DeckKind.HYP_TRANSLATION, DeckKind.HYP_GLIDE}


@dataclass(frozen=True)
class DeckMotion:
    r"""Generator of a cyclic deck group acting on planar coordinates.

    ============================  ==========================================
    ``EUCL_TRANSLATION``          :math:`(x, y) \mapsto (x + L, y)`
    ``EUCL_GLIDE``                :math:`(x, y) \mapsto (x + L, -y)`
    ``PARABOLIC``                 :math:`(x, y) \mapsto (x + L, y)` on the half-plane
    ``HYP_TRANSLATION``           :math:`(x, y) \mapsto (e^L x, e^L y)`
    ``HYP_GLIDE``                 :math:`(x, y) \mapsto (-e^L x, e^L y)`
    ============================  ==========================================
    """

    kind: DeckKind
    L: float

    def __post_init__(self):
        if not self.L > 0.0:
            raise ParameterError("Deck motion length must be positive, got {}".format(self.L))

    @property
    def reverses_orientation(self) -> bool:
        return self.kind in _REVERSING

    def orientation(self, power: int = 1) -> int:
        return -1 if self.reverses_orientation and power % 2 else 1

    def linear_part(self, power: int = 1) -> np.ndarray:
        """Matrix ``A`` with ``g^k(p) = A p + b``."""
        flip = -1.0 if self.reverses_orientation and power % 2 else 1.0
        if self.kind in _MULTIPLICATIVE:
            scale = np.exp(power * self.L)
            return np.array([[flip * scale, 0.0], [0.0, scale]])
        if self.kind == DeckKind.EUCL_GLIDE:
            return np.array([[1.0, 0.0], [0.0, flip]])
        return np.eye(2)

    def offset(self, power: int = 1) -> np.ndarray:
        if self.kind in _MULTIPLICATIVE:
            return np.zeros(2)
        return np.array([power * self.L, 0.0])

    def apply(self, points: Points, power: int = 1) -> Points:
        """``g^power`` applied to ``(m, 2)`` points; negative powers are inverses."""
        points = np.atleast_2d(np.asarray(points, dtype=float))
        return points @ self.linear_part(power).T + self.offset(power)

    def describe(self) -> Dict[str, Any]:
        return {"kind": self.kind.value, "L": self.L}


@dataclass(frozen=True)
class QuotientModel:
    r"""Surface :math:`X/G` given by an ambient metric and a single deck generator.

    The fundamental domain is the strip :math:`0 \le x < L` for additive motions and the annulus
    :math:`1 \le |p| < e^L` for the hyperbolic ones.
    """

    chart: Any
    generator: DeckMotion

    @property
    def fundamental_domain(self) -> Dict[str, Any]:
        if self.generator.kind in _MULTIPLICATIVE:
            return {"shape": "annulus", "inner": 1.0, "outer": float(np.exp(self.generator.L))}
        return {"shape": "strip", "left": 0.0, "right": self.generator.L}

    def describe(self) -> Dict[str, Any]:
        return {
            "ambient": getattr(self.chart, "name", type(self.chart).__name__),
            "generator": self.generator.describe(),
            "fundamental_domain": self.fundamental_domain,
        }


def _domain_index(points: Points, motion: DeckMotion) -> np.ndarray:
    if motion.kind in _MULTIPLICATIVE:
        radius = np.hypot(points[:, 0], points[:, 1])
        if np.any(radius <= 0.0):
            raise DomainError("The origin is a fixed point of the hyperbolic deck motion")
        return np.floor(np.log(radius) / motion.L).astype(int)
    return np.floor(points[:, 0] / motion.L).astype(int)


def project_to_fundamental_domain(points: Points, quotient: QuotientModel) -> Points:
    """Apply the deck power landing each point in the canonical fundamental domain.

    Points on the domain boundary go to the left (inner) edge.
    """
    points = np.atleast_2d(np.asarray(points, dtype=float))
    motion = quotient.generator
    out = np.empty_like(points)
    k = _domain_index(points, motion)
    for power in np.unique(k):
        mask = k == power
        out[mask] = motion.apply(points[mask], -int(power))
    # rounding can push a point a hair across the right edge
    again = _domain_index(out, motion)
    for power in np.unique(again[again != 0]):
        mask = again == power
        out[mask] = motion.apply(out[mask], -int(power))
    return out


def deck_apply(
    motion: DeckMotion, target: Union[Points, ClosedCurve], power: int = 1
) -> Union[Points, ClosedCurve]:
    """Image of points or of a curve under ``motion^power``."""
    if not isinstance(target, ClosedCurve):
        return motion.apply(target, power)
    linear = motion.linear_part(power)
    curve = target

    def moved(t):
        return motion.apply(curve.position(t), power)

    def differentiated(order):
        return lambda t: curve.derivative(t, order) @ linear.T

    derivatives = tuple(differentiated(k) for k in range(1, len(curve.derivative_evaluators) + 1))
    return dataclasses.replace(
        curve,
        evaluator=moved,
        derivative_evaluators=derivatives,
        kappa_prime_exact=None,
        name="{}-moved".format(curve.name),
    )


def check_deck_invariance(
    curve: Union[ClosedCurve, Callable[[np.ndarray], Points]],
    motion: DeckMotion,
    reparam: Optional[Reparametrization] = None,
    probes: Optional[np.ndarray] = None,
) -> float:
    r"""Largest :math:`\|\gamma(\sigma(t)) - g(\gamma(t))\|` over a probe grid.

    ``curve`` is a :class:`ClosedCurve` (default ``reparam`` is ``t -> t + P``) or a plain
    position function, in which case ``reparam`` and ``probes`` are required.
    """
    if isinstance(curve, ClosedCurve):
        position = curve.position
        reparam = reparam or (lambda t: t + curve.period)
        probes = curve.grid(64) if probes is None else probes
    else:
        if reparam is None or probes is None:
            raise ParameterError("Plain position functions need a reparametrization and probes")
        position = curve
    probes = np.asarray(probes, dtype=float)
    moved = motion.apply(position(probes))
    return float(np.max(np.linalg.norm(position(reparam(probes)) - moved, axis=1)))


def pullback_residual(motion: DeckMotion, chart: Any, points: Points) -> float:
    r"""How far ``motion`` is from an isometry of ``chart`` at ``points``:
    :math:`\max \|\varphi(gp)^2 A^T A - \varphi(p)^2 I\| / \varphi(p)^2`.

    Revolution surfaces are checked through their metric coefficients ``r^2`` and ``E``.
    """
    points = np.atleast_2d(np.asarray(points, dtype=float))
    moved = motion.apply(points)
    linear = motion.linear_part()
    if hasattr(chart, "factor"):
        before = chart.factor(points) ** 2
        after = chart.factor(moved) ** 2
        metric_before = before[:, None, None] * np.eye(2)
        metric_after = after[:, None, None] * np.eye(2)
    else:
        t_before, t_after = points[:, 1], moved[:, 1]
        metric_before = _revolution_metric(chart, t_before)
        metric_after = _revolution_metric(chart, t_after)
    pulled = np.einsum("ki,mkl,lj->mij", linear, metric_after, linear)
    scale = np.linalg.norm(metric_before, axis=(1, 2))
    return float(np.max(np.linalg.norm(pulled - metric_before, axis=(1, 2)) / scale))


def _revolution_metric(surface: Any, t: np.ndarray) -> np.ndarray:
    metric = np.zeros((t.shape[0], 2, 2))
    metric[:, 0, 0] = surface.r(t) ** 2
    metric[:, 1, 1] = surface.metric_E(t)
    return metric

