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
import time
from typing import Tuple

import numpy as np

import vertexlab
from vertexlab.commands import defaults
from vertexlab.commands.utils import (
    EXIT_USAGE,
    add_family_args,
    add_run_args,
    args_echo,
    check_positive_int,
    curve_svg,
    fail,
    output_path,
)
from vertexlab.config import Config
from vertexlab.constructions.registry import FAMILIES, FamilyParams, build_family
from vertexlab.curves.curve import ClosedCurve
from vertexlab.curves.profile import CSV_HEADER, curvature_profile, profile_to_rows
from vertexlab.curves.vertices import InflectionReport, VertexReport, inflection_report, vertex_report
from vertexlab.errors import ParameterError, UnknownFamilyError, VertexLabError
from vertexlab.maps.deck import pullback_residual
from vertexlab.maps.simplicity import quotient_simplicity_check
from vertexlab.reports import RunReport
from vertexlab.utils.formatting import write_csv, write_text
from vertexlab.vllogging import logging

ISOMETRY_PROBES = 64

BUILD_KEYS = ["family", "L", "lambda", "h", "eps", "a", "K", "depth", "samples", "tol"]


def residuals(curve: ClosedCurve) -> dict:
    """Closure of one period and how far the deck generator is from an isometry."""
    out = {"closure": curve.closure_residual()}
    if curve.quotient is not None:
        points = curve.position(curve.grid(ISOMETRY_PROBES))
        out["deck_isometry"] = pullback_residual(curve.quotient.generator, curve.quotient.chart, points)
    return out


def build_report(config: "Config") -> Tuple[RunReport, ClosedCurve, VertexReport, InflectionReport]:
    """Build the configured family and evaluate it without writing anything."""
    start = time.perf_counter()
    params = FamilyParams.from_config(config)
    curve = build_family(config.family, params)
    tol = float(config.tol)
    vertices = vertex_report(curve, tol=tol)
    inflections = inflection_report(curve, tol=tol)
    if vertices.all_critical:
        logging.info("Constant curvature", "{} every point is a vertex".format(curve.name))
    resolution = (config.get("simplicity") or {}).get("resolution") or defaults.simplicity.resolution
    simplicity = quotient_simplicity_check(curve, resolution=int(resolution))
    report = RunReport(
        command="build",
        args=args_echo(config, BUILD_KEYS),
        curve=curve.describe(),
        vertices=vertices.to_dict(),
        inflections=inflections.to_dict(),
        residuals=residuals(curve),
        simplicity=simplicity.to_dict(),
    )
    if config.get("timing"):
        report.elapsed = time.perf_counter() - start
    return report, curve, vertices, inflections


class BuildCommand:
    """
    Executes the ``build`` command, which constructs one registered curve family, counts its
    vertices and inflections over one period and writes three files to ``--out``:

    - ``<family>.csv`` with the columns ``t,s,x,y,kappa,kappa_prime`` over one period,
    - ``<family>.svg`` with the curve in its fundamental domain, vertices in red and inflections in blue,
    - ``<family>.json`` with the run report, which is also printed to stdout.

    Usage:
    The family name is positional; the parameters share one flat namespace named after their
    symbols. Unused parameters are ignored by a family. ``vertexlab families`` lists what each
    family reads.

    Optional arguments:
    - ``--L``, ``--lambda``, ``--h``, ``--eps``, ``--a``, ``--K``, ``--depth``: family parameters.
    - ``--samples``: grid size per period.
    - ``--tol``: relative threshold on the curvature derivative.
    - ``--out``: output directory, created when missing.

    Example usage:
    >>> vertexlab build cyl2v --a 0.09
    >>> vertexlab build flat-translation --L 1 --lambda 0
    >>> vertexlab build neck --K -1 --L 6.28 --lambda 0.01

    Note:
    An unknown family exits with status 2, a numerical failure with status 1.
    """

    @staticmethod
    def run(cli: "vertexlab.cli"):
        r"""Build a family and write its files."""
        config = cli.config
        try:
            report, curve, vertices, inflections = build_report(config)
        except (UnknownFamilyError, ParameterError) as e:
            fail(str(e), EXIT_USAGE)
        except VertexLabError as e:
            fail("{}: {}".format(type(e).__name__, e))

        name = config.family
        profile = curvature_profile(curve)
        write_csv(output_path(config.out, name + ".csv"), CSV_HEADER, profile_to_rows(profile))
        write_text(output_path(config.out, name + ".svg"), curve_svg(curve, vertices, inflections))
        report.files = [name + ".csv", name + ".svg", name + ".json"]
        text = report.to_json()
        path = write_text(output_path(config.out, name + ".json"), text)
        logging.success("Built", "{} vertices={} -> {}".format(name, report.vertices["count"], os.path.dirname(path)))
        print(text, end="")

    @staticmethod
    def check_config(config: "Config"):
        if config.get("family") not in FAMILIES:
            fail(
                "Unknown family: {}. Expected one of: {}".format(config.get("family"), ", ".join(FAMILIES)),
                EXIT_USAGE,
            )
        check_positive_int(config, "samples")
        if config.get("lambda") is not None and not np.isfinite(float(config.get("lambda"))):
            fail("--lambda must be finite", EXIT_USAGE)

    @staticmethod
    def add_args(parser: argparse.ArgumentParser):
        build_parser = parser.add_parser("build", help="""Build a curve family and count its vertices.""")
        build_parser.add_argument("family", type=str, help="Registered family name.")
        add_family_args(build_parser)
        add_run_args(build_parser)
        build_parser.add_argument(
            "--simplicity.resolution",
            type=int,
            default=defaults.simplicity.resolution,
            help="Polyline size of the quotient simplicity check.",
        )
        vertexlab.logging.add_args(build_parser)
