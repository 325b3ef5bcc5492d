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
from typing import Any, Dict, List, Optional, Set, Tuple

import numpy as np

from vertexlab.curves.curve import ClosedCurve
from vertexlab.errors import DeckInvarianceError
from vertexlab.maps.deck import QuotientModel
from vertexlab.vllogging import logging

DEFAULT_RESOLUTION = 2048
DECK_TOL = 1e-8
MAX_TRANSLATES = 64
RESAMPLE_FACTOR = 4
# Grid offset, in steps, keeping polyline vertices off symmetric crossing points.
GRID_OFFSET = 0.381966011250105


class SimplicityStatus(str, Enum):
    SIMPLE = "simple"
    SELF_INTERSECTING = "self-intersecting"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class SimplicityReport:
    """Outcome of a polyline simplicity check; witnesses are parameter pairs ``t1 <= t2``."""

    status: SimplicityStatus
    witnesses: Tuple[Tuple[float, float], ...]
    resolution: int

    @property
    def simple(self) -> bool:
        return self.status == SimplicityStatus.SIMPLE

    def to_dict(self) -> Dict[str, Any]:
        return {
            "simple": self.simple,
            "status": self.status.value,
            "witnesses": [{"t1": t1, "t2": t2} for t1, t2 in self.witnesses],
        }


@dataclass(frozen=True)
class _Polyline:
    start: np.ndarray
    end: np.ndarray
    param: np.ndarray
    arc: np.ndarray
    index: np.ndarray


def _cross(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    return u[:, 0] * v[:, 1] - u[:, 1] * v[:, 0]


def _point_segment_distance(p: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    ab = b - a
    denom = np.maximum(np.sum(ab * ab, axis=1), np.finfo(float).tiny)
    u = np.clip(np.sum((p - a) * ab, axis=1) / denom, 0.0, 1.0)
    return np.linalg.norm(p - (a + u[:, None] * ab), axis=1)


def _translate_powers(points: np.ndarray, quotient: Optional[QuotientModel], margin: float) -> List[int]:
    if quotient is None:
        return [0]
    lo, hi = points.min(axis=0) - margin, points.max(axis=0) + margin
    overlapping: Set[int] = {0}
    for k in range(-MAX_TRANSLATES, MAX_TRANSLATES + 1):
        if k == 0:
            continue
        moved = quotient.generator.apply(points, k)
        if np.all(moved.min(axis=0) <= hi) and np.all(moved.max(axis=0) >= lo):
            overlapping.add(k)
    padded = set(overlapping)
    for k in overlapping:
        padded.update({k - 1, k + 1})
    return sorted(k for k in padded if abs(k) <= MAX_TRANSLATES)


def _candidate_pairs(segments: _Polyline, cell: float, margin: float) -> np.ndarray:
    lo = np.minimum(segments.start, segments.end) - margin
    hi = np.maximum(segments.start, segments.end) + margin
    ix0, iy0 = np.floor(lo / cell).astype(np.int64).T
    ix1, iy1 = np.floor(hi / cell).astype(np.int64).T
    count = segments.start.shape[0]
    ids = np.arange(count)
    keys, owners = [], []
    for xs in (ix0, ix1):
        for ys in (iy0, iy1):
            keys.append(xs * 4_000_003 + ys)
            owners.append(ids)
    table = np.unique(np.stack([np.concatenate(keys), np.concatenate(owners)], axis=1), axis=0)
    order = np.lexsort((table[:, 1], table[:, 0]))
    table = table[order]
    boundaries = np.flatnonzero(np.diff(table[:, 0])) + 1
    pairs = []
    for group in np.split(table[:, 1], boundaries):
        if group.shape[0] < 2:
            continue
        u, v = np.triu_indices(group.shape[0], k=1)
        pairs.append(np.stack([group[u], group[v]], axis=1))
    if not pairs:
        return np.empty((0, 2), dtype=np.int64)
    return np.unique(np.concatenate(pairs), axis=0)


def _polyline_check(
    curve: ClosedCurve, quotient: Optional[QuotientModel], n: int, tol: Optional[float]
) -> Tuple[List[Tuple[float, float]], bool]:
    period = curve.period
    h = period / n
    t = GRID_OFFSET * h + h * np.arange(n + 1)
    points = curve.position(t)
    start, end = points[:-1], points[1:]

    scale = float(np.linalg.norm(points.max(axis=0) - points.min(axis=0)))
    if tol is None:
        midpoints = curve.position(t[:-1] + 0.5 * h)
        sagitta = float(np.max(np.linalg.norm(midpoints - 0.5 * (start + end), axis=1)))
        tol = 2.0 * sagitta + 1e-12 * scale

    powers = _translate_powers(points, quotient, tol)
    starts, ends, arcs = [], [], []
    for k in powers:
        if k == 0:
            starts.append(start)
            ends.append(end)
        else:
            starts.append(quotient.generator.apply(start, k))
            ends.append(quotient.generator.apply(end, k))
        arcs.append(np.full(n, k))
    segments = _Polyline(
        start=np.concatenate(starts),
        end=np.concatenate(ends),
        param=np.tile(t[:-1], len(powers)),
        arc=np.concatenate(arcs),
        index=np.tile(np.arange(n), len(powers)),
    )
    lengths = np.linalg.norm(segments.end - segments.start, axis=1)
    cell = float(max(lengths.max(), tol, 1e-300)) + 2.0 * tol
    pairs = _candidate_pairs(segments, cell, tol)
    if pairs.shape[0] == 0:
        return [], False

    i, j = pairs[:, 0], pairs[:, 1]
    # only pairs touching the base arc, the rest are deck images of these
    keep = (segments.arc[i] == 0) | (segments.arc[j] == 0)
    i, j = i[keep], j[keep]
    swap = segments.arc[i] != 0
    i, j = np.where(swap, j, i), np.where(swap, i, j)

    ai, aj = segments.index[i], segments.index[j]
    arc_j = segments.arc[j]
    same = arc_j == 0
    adjacent = same & (np.abs(ai - aj) <= 1)
    if curve.deck_power == 0:
        adjacent |= same & (np.abs(ai - aj) == n - 1)
    else:
        power = curve.deck_power
        adjacent |= (arc_j == power) & (ai == n - 1) & (aj == 0)
        adjacent |= (arc_j == -power) & (ai == 0) & (aj == n - 1)
    i, j = i[~adjacent], j[~adjacent]
    if i.shape[0] == 0:
        return [], False

    a, b = segments.start[i], segments.end[i]
    c, d = segments.start[j], segments.end[j]
    o1, o2 = _cross(b - a, c - a), _cross(b - a, d - a)
    o3, o4 = _cross(d - c, a - c), _cross(d - c, b - c)
    crossing = (o1 * o2 < 0.0) & (o3 * o4 < 0.0)

    witnesses = []
    for idx in np.flatnonzero(crossing):
        r, s = b[idx] - a[idx], d[idx] - c[idx]
        denom = r[0] * s[1] - r[1] * s[0]
        qp = c[idx] - a[idx]
        u = (qp[0] * s[1] - qp[1] * s[0]) / denom
        v = (qp[0] * r[1] - qp[1] * r[0]) / denom
        t1 = float((segments.param[i[idx]] + u * h) % period)
        t2 = float((segments.param[j[idx]] + v * h) % period)
        witnesses.append((min(t1, t2), max(t1, t2)))

    rest = ~crossing
    distance = np.minimum.reduce(
        [
            _point_segment_distance(a[rest], c[rest], d[rest]),
            _point_segment_distance(b[rest], c[rest], d[rest]),
            _point_segment_distance(c[rest], a[rest], b[rest]),
            _point_segment_distance(d[rest], a[rest], b[rest]),
        ]
    ) if np.any(rest) else np.empty(0)
    near = bool(np.any(distance < tol))
    return sorted(set(witnesses)), near


def quotient_simplicity_check(
    curve: ClosedCurve,
    quotient: Optional[QuotientModel] = None,
    tol: Optional[float] = None,
    resolution: int = DEFAULT_RESOLUTION,
) -> SimplicityReport:
    r"""Check whether the projection of ``curve`` to its quotient is simple.

    One fundamental arc is turned into a polyline and tested against itself and against the deck
    translates whose bounding boxes overlap it, padded by one. Segment pairs come from a spatial
    hash; the default tolerance is twice the largest polyline sagitta. A near tangency triggers one
    resample at four times the resolution before the check reports ``inconclusive``.

    Raises:
        DeckInvarianceError: the curve is not closed under its deck motion.
    """
    quotient = quotient if quotient is not None else curve.quotient
    if curve.quotient is not None and curve.deck_power != 0:
        residual = curve.closure_residual()
        if residual > DECK_TOL:
            raise DeckInvarianceError(
                "Closure residual {:.3g} exceeds {:.1g}".format(residual, DECK_TOL)
            )

    n = int(resolution)
    for attempt in range(2):
        witnesses, near = _polyline_check(curve, quotient, n, tol)
        if witnesses:
            return SimplicityReport(SimplicityStatus.SELF_INTERSECTING, tuple(witnesses), n)
        if not near:
            return SimplicityReport(SimplicityStatus.SIMPLE, (), n)
        if attempt == 0:
            logging.warning(
                "Near tangency",
                "{}: resampling simplicity check at {} points".format(curve.name, RESAMPLE_FACTOR * n),
            )
            n *= RESAMPLE_FACTOR
    return SimplicityReport(SimplicityStatus.INCONCLUSIVE, (), n)
