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

import csv
import io
import os
from typing import Any, Dict, Iterable, List, Optional, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

SVG_HASHSALT = "vertexlab"
SVG_MARGIN = 0.05
SVG_WIDTH = 6.0
VERTEX_COLOR = "red"
INFLECTION_COLOR = "blue"
SUITE_HEADER = ("suite", "case", "status", "message")


def format_float(value: float) -> str:
    """Shortest text that reads back to the same double."""
    return repr(float(value))


def csv_text(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_float(v) if isinstance(v, (float, np.floating)) else v for v in row])
    return buffer.getvalue()


def write_text(path: str, text: str) -> str:
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    with open(path, "w", newline="") as f:
        f.write(text)
    return path


def write_csv(path: str, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    return write_text(path, csv_text(header, rows))


def break_jumps(points: np.ndarray, threshold: float) -> np.ndarray:
    """Insert NaN rows where consecutive points are farther apart than ``threshold``,
    so a curve cut by a fundamental domain is not drawn across it.
    """
    points = np.atleast_2d(points)
    if points.shape[0] < 2:
        return points
    jumps = np.flatnonzero(np.linalg.norm(np.diff(points, axis=0), axis=1) > threshold)
    if jumps.size == 0:
        return points
    return np.insert(points, jumps + 1, np.nan, axis=0)


def _limits(points: np.ndarray):
    finite = points[np.all(np.isfinite(points), axis=1)]
    lo, hi = finite.min(axis=0), finite.max(axis=0)
    span = np.maximum(hi - lo, 1e-9 * max(1.0, float(np.abs(finite).max())))
    return lo - SVG_MARGIN * span, hi + SVG_MARGIN * span


def svg_text(
    points: np.ndarray,
    vertices: Optional[np.ndarray] = None,
    inflections: Optional[np.ndarray] = None,
    title: Optional[str] = None,
) -> str:
    r"""SVG drawing of a curve with vertex (red) and inflection (blue) markers.

    The axes fill the figure and the view is the bounding box of the curve plus a 5% margin.
    The hash salt is fixed and the date metadata dropped so equal inputs give equal bytes.
    """
    points = np.atleast_2d(np.asarray(points, dtype=float))
    lo, hi = _limits(points)
    aspect = float(np.clip((hi[1] - lo[1]) / (hi[0] - lo[0]), 0.1, 10.0))
    with plt.rc_context({"svg.hashsalt": SVG_HASHSALT, "svg.fonttype": "none"}):
        fig = plt.figure(figsize=(SVG_WIDTH, SVG_WIDTH * aspect))
        try:
            ax = fig.add_axes([0.0, 0.0, 1.0, 1.0])
            ax.set_axis_off()
            ax.plot(points[:, 0], points[:, 1], color="black", linewidth=1.0)
            for markers, color in ((vertices, VERTEX_COLOR), (inflections, INFLECTION_COLOR)):
                if markers is not None and len(markers):
                    markers = np.atleast_2d(markers)
                    ax.plot(markers[:, 0], markers[:, 1], "o", color=color, markersize=5)
            if title:
                ax.set_title(title)
            ax.set_xlim(lo[0], hi[0])
            ax.set_ylim(lo[1], hi[1])
            buffer = io.StringIO()
            fig.savefig(buffer, format="svg", metadata={"Date": None})
        finally:
            plt.close(fig)
    return buffer.getvalue()


def write_svg(path: str, points: np.ndarray, **kwargs) -> str:
    return write_text(path, svg_text(points, **kwargs))


def report_rows(report: Dict[str, Any]) -> List[List[Any]]:
    """Suite case rows of a verification report in ``SUITE_HEADER`` order."""
    return [
        [suite["name"], case["name"], "pass" if case["passed"] else "fail", case.get("message", "")]
        for suite in report.get("suites") or []
        for case in suite["cases"]
    ]
