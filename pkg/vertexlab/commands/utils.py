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

import argparse
import os
import sys
from typing import Any, Dict, List, Optional

import numpy as np

from vertexlab import __console__ as console
from vertexlab.commands import defaults
from vertexlab.config import Config
from vertexlab.curves.curve import ClosedCurve
from vertexlab.curves.vertices import InflectionReport, VertexReport
from vertexlab.maps.deck import project_to_fundamental_domain
from vertexlab.utils.formatting import break_jumps, svg_text
from vertexlab.vllogging import logging

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

# Jumps wider than this share of the drawing are domain cuts.
JUMP_FRACTION = 0.25


def add_family_args(parser: argparse.ArgumentParser):
    """Flat namespace of the family parameters, named after their symbols."""
    parser.add_argument("--L", type=float, default=defaults.family.L, help="Period, deck length or neck length.")
    parser.add_argument(
        "--lambda",
        type=float,
        default=defaults.family["lambda"],
        help="Perturbation amplitude. Defaults to the small regime of each family.",
    )
    parser.add_argument("--h", type=float, default=defaults.family.h, help="Horocycle height.")
    parser.add_argument("--eps", type=float, default=defaults.family.eps, help="Offset of the embedded pairs.")
    parser.add_argument("--a", type=float, default=defaults.family.a, help="Shape constant of the two vertex cylinder curve.")
    parser.add_argument("--K", type=float, default=defaults.family.K, help="Target curvature of the neck surface.")
    parser.add_argument("--depth", type=float, default=defaults.family.depth, help="Depth of the cusp transplant.")


def add_run_args(parser: argparse.ArgumentParser, out: Optional[str] = defaults.out):
    """Grid, tolerance, seed and output flags shared by build and verify."""
    parser.add_argument(
        "--samples",
        type=int,
        default=defaults.samples,
        help="Grid size per period. Defaults to $VERTEXLAB_SAMPLES or 4096.",
    )
    parser.add_argument("--n", type=int, default=defaults.n, help="Number of random curves for the property suites.")
    parser.add_argument("--seed", type=int, default=defaults.seed, help="Seed of the random curves.")
    parser.add_argument("--tol", type=float, default=defaults.tol, help="Relative threshold on the curvature derivative.")
    parser.add_argument("--out", type=str, default=out, help="Output directory.")
    parser.add_argument(
        "--timing",
        action="store_true",
        default=False,
        help="Record wall time in the report. Reports are no longer byte-stable.",
    )


def fail(message: str, code: int = EXIT_FAILURE):
    console.print(":cross_mark:[red]{}[/red]".format(message))
    sys.exit(code)


def check_positive_int(config: "Config", key: str):
    value = config.get(key)
    if value is not None and int(value) < 1:
        fail("--{} must be a positive integer, got {}".format(key, value), EXIT_USAGE)


def args_echo(config: "Config", keys: List[str]) -> Dict[str, Any]:
    """The configuration values a report depends on."""
    return {key: config.get(key) for key in keys}


def drawing_points(curve: ClosedCurve, t: np.ndarray) -> np.ndarray:
    """Curve points as drawn: quotients in their fundamental domain, everything else as is."""
    points = curve.position(t)
    if curve.quotient is not None:
        points = project_to_fundamental_domain(points, curve.quotient)
    return points


def curve_svg(
    curve: ClosedCurve,
    vertices: Optional[VertexReport] = None,
    inflections: Optional[InflectionReport] = None,
) -> str:
    points = drawing_points(curve, curve.grid())
    extent = float(np.max(np.ptp(points, axis=0)))
    points = break_jumps(points, JUMP_FRACTION * extent)
    marked_vertices = None
    if vertices is not None and len(vertices.vertices):
        marked_vertices = drawing_points(curve, vertices.parameters)
    marked_inflections = None
    if inflections is not None and len(inflections.inflections):
        marked_inflections = drawing_points(curve, inflections.parameters)
    logging.debug(
        "Drawing",
        "{} vertices={} inflections={}".format(
            curve.name,
            0 if marked_vertices is None else len(marked_vertices),
            0 if marked_inflections is None else len(marked_inflections),
        ),
    )
    return svg_text(points, vertices=marked_vertices, inflections=marked_inflections, title=None)


def output_path(out: str, filename: str) -> str:
    return os.path.join(os.path.expanduser(out), filename)
