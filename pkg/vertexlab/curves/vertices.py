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
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

import numpy as np

from vertexlab.curves.curve import ClosedCurve
from vertexlab.curves.profile import CurvatureProfile, curvature_profile
from vertexlab.errors import ResolutionError
from vertexlab.utils import cyclic_distance, refine_root
from vertexlab.vllogging import logging

DEFAULT_TOL = 1e-7
# Grid values below this fraction of the largest one count as exact zeros.
ZERO_FLOOR = 1e-12
# Absolute floor of the all-critical threshold.
ALL_CRITICAL_FLOOR = 1e-8
ROOT_XTOL = 1e-10
MERGE_TOL = 1e-6
# |second derivative| below this fraction of a unit sinusoid of the same amplitude is degenerate.
DEGENERACY_TOL = 1e-3

Count = Union[int, float]


class VertexKind(str, Enum):
    MAX = "max"
    MIN = "min"


@dataclass(frozen=True)
class Vertex:
    t: float
    kind: VertexKind
    degenerate: bool
    kappa: float
    kappa_second: float

    def to_dict(self) -> Dict[str, Any]:
        return {"t": self.t, "kind": self.kind.value, "degenerate": self.degenerate}


@dataclass(frozen=True)
class Inflection:
    t: float
    rising: bool
    degenerate: bool

    def to_dict(self) -> Dict[str, Any]:
        return {"t": self.t, "rising": self.rising, "degenerate": self.degenerate}


def _count(items: Tuple, everywhere: bool) -> Count:
    return float("inf") if everywhere else len(items)


def _json_count(count: Count) -> Union[int, str]:
    return "inf" if count == float("inf") else int(count)


@dataclass(frozen=True)
class VertexReport:
    r"""Refined critical points of the geodesic curvature over one period.

    Only sign changes of :math:`\kappa'` count as vertices; grid zeros without a sign change are
    listed in ``tangencies``. ``all_critical`` marks curves of constant curvature, whose count is
    reported as infinite with an empty vertex list.
    """

    vertices: Tuple[Vertex, ...]
    period: float
    all_critical: bool = False
    tangencies: Tuple[float, ...] = ()

    @property
    def count(self) -> Count:
        return _count(self.vertices, self.all_critical)

    @property
    def parameters(self) -> np.ndarray:
        return np.array([v.t for v in self.vertices])

    @property
    def nondegenerate(self) -> bool:
        return not any(v.degenerate for v in self.vertices)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "count": _json_count(self.count),
            "all_critical": self.all_critical,
            "vertices": [v.to_dict() for v in self.vertices],
            "tangencies": list(self.tangencies),
        }


@dataclass(frozen=True)
class InflectionReport:
    """Zeros of the geodesic curvature with a sign change, over one period."""

    inflections: Tuple[Inflection, ...]
    period: float
    all_vanishing: bool = False
    tangencies: Tuple[float, ...] = ()

    @property
    def count(self) -> Count:
        return _count(self.inflections, self.all_vanishing)

    @property
    def parameters(self) -> np.ndarray:
        return np.array([i.t for i in self.inflections])

    def to_dict(self) -> Dict[str, Any]:
        return {
            "count": _json_count(self.count),
            "all_vanishing": self.all_vanishing,
            "inflections": [i.to_dict() for i in self.inflections],
            "tangencies": list(self.tangencies),
        }


@dataclass(frozen=True)
class _Root:
    t: float
    rising: bool
    derivative: float
    degenerate: bool


def _brackets(
    values: np.ndarray, orientation: int
) -> Tuple[List[Tuple[int, int]], List[Tuple[int, int]]]:
    """Sign-change brackets and same-sign zero runs, as index pairs on the lift.

    The scan starts at the first non-zero sample and runs one full period; an index ``k >= n``
    stands for sample ``k - n`` after the closing deck motion.
    """
    n = values.shape[0]
    scale = float(np.max(np.abs(values)))
    signs = np.where(np.abs(values) <= ZERO_FLOOR * scale, 0, np.sign(values)).astype(int)
    nonzero = np.flatnonzero(signs)
    if nonzero.size == 0:
        return [], []
    brackets, tangent_runs = [], []
    prev = int(nonzero[0])
    prev_sign = signs[prev]
    for k in range(prev + 1, prev + n + 1):
        sign = signs[k % n] * (orientation if k >= n else 1)
        if sign == 0:
            continue
        if sign != prev_sign:
            brackets.append((prev, k))
        elif k - prev > 1:
            tangent_runs.append((prev, k))
        prev, prev_sign = k, sign
    return brackets, tangent_runs


def _lift_parameter(t: np.ndarray, period: float, k: int) -> float:
    n = t.shape[0]
    return float(t[k % n] + period * (k // n))


def _roots(
    fn: Callable[[np.ndarray], np.ndarray],
    values: np.ndarray,
    t: np.ndarray,
    period: float,
    orientation: int,
) -> Tuple[List[_Root], Tuple[float, ...]]:
    n = t.shape[0]
    step = period / n
    brackets, tangent_runs = _brackets(values, orientation)

    starts = [a for a, _ in brackets]
    for j in range(len(starts)):
        gap = (starts[(j + 1) % len(starts)] - starts[j]) % n
        if len(starts) > 1 and gap < 2:
            raise ResolutionError(
                "Sign changes near t={:.6g} are closer than two grid steps, resample with more points".format(
                    _lift_parameter(t, period, starts[j]) % period
                )
            )

    def scalar(tau: float) -> float:
        return float(fn(np.array([tau]))[0])

    def sampled(k: int) -> float:
        return float(values[k % n] * (orientation if k >= n else 1))

    amplitude = float(np.max(np.abs(values)))
    threshold = DEGENERACY_TOL * amplitude * 2.0 * np.pi / period
    roots: List[_Root] = []
    for a, b in brackets:
        ta, tb = _lift_parameter(t, period, a), _lift_parameter(t, period, b)
        root = refine_root(scalar, ta, tb, ROOT_XTOL * period, sampled(a), sampled(b))
        derivative = float(
            (scalar(root + step) - scalar(root - step)) / (2.0 * step)
        )
        roots.append(
            _Root(
                t=float(root % period),
                rising=sampled(a) < 0.0,
                derivative=derivative,
                degenerate=abs(derivative) < threshold,
            )
        )

    roots.sort(key=lambda r: r.t)
    merged: List[_Root] = []
    for root in roots:
        if merged and cyclic_distance(root.t, merged[-1].t, period) < MERGE_TOL * period:
            continue
        merged.append(root)
    if len(merged) > 1 and cyclic_distance(merged[0].t, merged[-1].t, period) < MERGE_TOL * period:
        merged.pop()

    tangencies = tuple(
        float(0.5 * (_lift_parameter(t, period, a) + _lift_parameter(t, period, b)) % period)
        for a, b in tangent_runs
    )
    return merged, tangencies


def count_vertices(profile: CurvatureProfile, tol: float = DEFAULT_TOL) -> VertexReport:
    r"""Vertices of the profiled curve: refined sign changes of :math:`\kappa'`.

    Args:
        profile (CurvatureProfile): profile over one full period.
        tol (float): relative threshold below which :math:`\kappa'` counts as identically zero.
    Returns:
        VertexReport: refined vertices, classified by the sign of :math:`\kappa''`.
    Raises:
        ResolutionError: two sign changes fall within two grid steps.
    """
    curve = profile.curve
    scale = max(float(np.max(np.abs(profile.kappa))) / profile.length, ALL_CRITICAL_FLOOR)
    if float(np.max(np.abs(profile.kappa_prime))) < tol * scale:
        logging.debug("All critical", curve.name)
        return VertexReport(vertices=(), period=curve.period, all_critical=True)

    roots, tangencies = _roots(
        curve.kappa_prime, profile.kappa_prime, profile.t, curve.period, curve.orientation
    )
    kappa = curve.geodesic_curvature(np.array([r.t for r in roots])) if roots else []
    vertices = []
    for root, value in zip(roots, kappa):
        if root.degenerate:
            is_max = not root.rising
        else:
            is_max = root.derivative < 0.0
        vertices.append(
            Vertex(
                t=root.t,
                kind=VertexKind.MAX if is_max else VertexKind.MIN,
                degenerate=root.degenerate,
                kappa=float(value),
                kappa_second=root.derivative,
            )
        )
    logging.debug("Vertices", "{} count={}".format(curve.name, len(vertices)))
    return VertexReport(vertices=tuple(vertices), period=curve.period, tangencies=tangencies)


def count_inflections(profile: CurvatureProfile, tol: float = DEFAULT_TOL) -> InflectionReport:
    """Inflections of the profiled curve: refined sign changes of the geodesic curvature."""
    curve = profile.curve
    if float(np.max(np.abs(profile.kappa))) < tol * 2.0 * np.pi / profile.length:
        return InflectionReport(inflections=(), period=curve.period, all_vanishing=True)

    roots, tangencies = _roots(
        curve.geodesic_curvature, profile.kappa, profile.t, curve.period, curve.orientation
    )
    inflections = tuple(Inflection(t=r.t, rising=r.rising, degenerate=r.degenerate) for r in roots)
    logging.debug("Inflections", "{} count={}".format(curve.name, len(inflections)))
    return InflectionReport(inflections=inflections, period=curve.period, tangencies=tangencies)


def vertex_report(
    curve: ClosedCurve, n: Optional[int] = None, tol: float = DEFAULT_TOL, retries: int = 1
) -> VertexReport:
    """Profile and count, doubling the grid on a resolution failure up to ``retries`` times."""
    n = curve.samples if n is None else n
    for attempt in range(retries + 1):
        try:
            return count_vertices(curvature_profile(curve, n), tol=tol)
        except ResolutionError:
            if attempt == retries:
                raise
            logging.debug("Resampling", "{} n={} -> {}".format(curve.name, n, 2 * n))
            n *= 2
    raise AssertionError("unreachable")


def inflection_report(
    curve: ClosedCurve, n: Optional[int] = None, tol: float = DEFAULT_TOL, retries: int = 1
) -> InflectionReport:
    n = curve.samples if n is None else n
    for attempt in range(retries + 1):
        try:
            return count_inflections(curvature_profile(curve, n), tol=tol)
        except ResolutionError:
            if attempt == retries:
                raise
            n *= 2
    raise AssertionError("unreachable")


def same_parameters(a: np.ndarray, b: np.ndarray, period: float, tol: float = 1e-6) -> bool:
    """Whether two sets of curve parameters agree up to ``tol * period``, modulo the period."""
    a, b = np.sort(np.asarray(a, dtype=float)), np.sort(np.asarray(b, dtype=float))
    if a.shape != b.shape:
        return False
    if a.size == 0:
        return True
    distances = cyclic_distance(a[:, None], b[None, :], period)
    return bool(np.all(distances.min(axis=1) < tol * period) and np.all(distances.min(axis=0) < tol * period))
