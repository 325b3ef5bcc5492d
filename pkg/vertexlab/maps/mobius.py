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
from typing import Optional

import numpy as np

from vertexlab.curves.curve import ClosedCurve
from vertexlab.errors import ParameterError, PoleError
from vertexlab.geometry.charts import EUCLIDEAN, HALF_PLANE, ChartKind

DET_TOL = 1e-12
POLE_TOL = 1e-6
POLE_PROBES = 8192


class MobiusKind(str, Enum):
    PLANAR = "planar"
    HALF_PLANE = "half-plane"


def _as_complex(points: np.ndarray) -> np.ndarray:
    points = np.atleast_2d(points)
    return points[:, 0] + 1j * points[:, 1]


def _as_points(z: np.ndarray) -> np.ndarray:
    return np.stack([z.real, z.imag], axis=1)


@dataclass(frozen=True)
class MobiusMap:
    r"""Map :math:`z \mapsto (a\zeta + b)/(c\zeta + d)` with :math:`\zeta = z` or :math:`\bar z`.

    Anti-holomorphic maps (``conjugate=True``) cover circle inversions, e.g. :math:`1/\bar z`
    is inversion in the unit circle. ``HALF_PLANE`` maps have real coefficients with positive
    determinant and act as isometries of the hyperbolic half-plane.
    """

    a: complex
    b: complex
    c: complex
    d: complex
    kind: MobiusKind = MobiusKind.PLANAR
    conjugate: bool = False

    def __post_init__(self):
        if abs(self.det) <= DET_TOL:
            raise ParameterError("Mobius map is singular, |ad - bc| = {:.3g}".format(abs(self.det)))
        if self.kind == MobiusKind.HALF_PLANE:
            coefficients = np.array([self.a, self.b, self.c, self.d], dtype=complex)
            if np.any(np.abs(coefficients.imag) > 0.0) or self.det.real <= 0.0 or self.conjugate:
                raise ParameterError("Half-plane maps need real coefficients with ad - bc > 0")

    @property
    def det(self) -> complex:
        return complex(self.a * self.d - self.b * self.c)

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=complex)

    @property
    def pole(self) -> Optional[complex]:
        """Point sent to infinity, ``None`` for affine maps."""
        if self.c == 0:
            return None
        pole = -self.d / self.c
        return complex(np.conj(pole)) if self.conjugate else complex(pole)

    @classmethod
    def from_matrix(
        cls, matrix: np.ndarray, kind: MobiusKind = MobiusKind.PLANAR, conjugate: bool = False
    ) -> "MobiusMap":
        m = np.asarray(matrix, dtype=complex)
        if kind == MobiusKind.HALF_PLANE:
            m = m.real.astype(complex)
        return cls(complex(m[0, 0]), complex(m[0, 1]), complex(m[1, 0]), complex(m[1, 1]), kind, conjugate)

    @classmethod
    def identity(cls, kind: MobiusKind = MobiusKind.PLANAR) -> "MobiusMap":
        return cls(1, 0, 0, 1, kind)

    @classmethod
    def translation(cls, b: complex, kind: MobiusKind = MobiusKind.PLANAR) -> "MobiusMap":
        return cls(1, complex(b), 0, 1, kind)

    @classmethod
    def scaling(cls, factor: float) -> "MobiusMap":
        if not factor > 0.0:
            raise ParameterError("Scaling factor must be positive")
        return cls(factor, 0, 0, 1, MobiusKind.HALF_PLANE)

    @classmethod
    def inversion(cls) -> "MobiusMap":
        """Inversion in the unit circle, :math:`z \\mapsto 1/\\bar z`."""
        return cls(0, 1, 1, 0, MobiusKind.PLANAR, conjugate=True)

    def compose(self, other: "MobiusMap") -> "MobiusMap":
        """``self`` after ``other``."""
        inner = np.conj(other.matrix) if self.conjugate else other.matrix
        kind = (
            MobiusKind.HALF_PLANE
            if self.kind == other.kind == MobiusKind.HALF_PLANE
            else MobiusKind.PLANAR
        )
        return MobiusMap.from_matrix(self.matrix @ inner, kind, self.conjugate != other.conjugate)

    def inverse(self) -> "MobiusMap":
        inv = np.linalg.inv(self.matrix)
        if self.conjugate:
            inv = np.conj(inv)
        return MobiusMap.from_matrix(inv, self.kind, self.conjugate)

    def _zeta(self, z: np.ndarray) -> np.ndarray:
        return np.conj(z) if self.conjugate else z

    def __call__(self, z: np.ndarray) -> np.ndarray:
        zeta = self._zeta(np.asarray(z, dtype=complex))
        return (self.a * zeta + self.b) / (self.c * zeta + self.d)

    def apply_points(self, points: np.ndarray) -> np.ndarray:
        return _as_points(self(_as_complex(points)))

    def holomorphic_derivatives(self, zeta: np.ndarray):
        """First three derivatives of :math:`(a\\zeta + b)/(c\\zeta + d)` in :math:`\\zeta`."""
        q = self.c * zeta + self.d
        det = self.det
        return det / q**2, -2.0 * self.c * det / q**3, 6.0 * self.c**2 * det / q**4

    def denominator(self, z: np.ndarray) -> np.ndarray:
        return np.abs(self.c * self._zeta(np.asarray(z, dtype=complex)) + self.d)


def mobius_apply(mobius: MobiusMap, curve: ClosedCurve, probes: int = POLE_PROBES) -> ClosedCurve:
    r"""Image of ``curve`` under ``mobius`` with derivatives composed by the chain rule.

    Planar maps produce Euclidean curves; half-plane maps keep the hyperbolic metric.

    Raises:
        PoleError: the curve passes within ``POLE_TOL`` of the pole.
    """
    if curve.deck_power != 0:
        raise ParameterError("Mobius maps act on curves that close in the plane")
    if mobius.kind == MobiusKind.HALF_PLANE:
        if getattr(curve.ambient, "kind", None) != ChartKind.HALF_PLANE:
            raise ParameterError("Half-plane maps act on half-plane curves")
        ambient = HALF_PLANE
    else:
        if getattr(curve.ambient, "kind", None) != ChartKind.EUCLIDEAN:
            raise ParameterError("Planar Mobius maps act on Euclidean curves")
        ambient = EUCLIDEAN

    if mobius.c != 0:
        grid = curve.grid(max(probes, curve.samples))
        scale = abs(mobius.c) + abs(mobius.d)
        nearest = float(np.min(mobius.denominator(_as_complex(curve.position(grid)))))
        if nearest <= POLE_TOL * scale:
            raise PoleError(
                "Curve passes within {:.3g} of the pole {}".format(nearest / abs(mobius.c), mobius.pole)
            )

    def zeta_derivative(t, order):
        z = _as_complex(curve.derivative(t, order))
        return np.conj(z) if mobius.conjugate else z

    def position(t):
        return _as_points(mobius(_as_complex(curve.position(t))))

    def first(t):
        f1, _, _ = mobius.holomorphic_derivatives(zeta_derivative(t, 0))
        return _as_points(f1 * zeta_derivative(t, 1))

    def second(t):
        f1, f2, _ = mobius.holomorphic_derivatives(zeta_derivative(t, 0))
        z1, z2 = zeta_derivative(t, 1), zeta_derivative(t, 2)
        return _as_points(f2 * z1**2 + f1 * z2)

    def third(t):
        f1, f2, f3 = mobius.holomorphic_derivatives(zeta_derivative(t, 0))
        z1, z2, z3 = zeta_derivative(t, 1), zeta_derivative(t, 2), zeta_derivative(t, 3)
        return _as_points(f3 * z1**3 + 3.0 * f2 * z1 * z2 + f1 * z3)

    return dataclasses.replace(
        curve,
        evaluator=position,
        ambient=ambient,
        derivative_evaluators=(first, second, third),
        kappa_prime_exact=None,
        quotient=None,
        name="mobius({})".format(curve.name),
    )


def random_mobius(rng: np.random.Generator, spread: float = 0.5) -> MobiusMap:
    """Planar map close to the identity, drawn from ``rng``."""
    a, d = 1.0 + spread * (rng.normal() + 1j * rng.normal()), 1.0 + spread * (rng.normal() + 1j * rng.normal())
    b, c = spread * (rng.normal() + 1j * rng.normal()), 0.1 * spread * (rng.normal() + 1j * rng.normal())
    return MobiusMap(complex(a), complex(b), complex(c), complex(d))
