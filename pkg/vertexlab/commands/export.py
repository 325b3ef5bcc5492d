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

import vertexlab
from vertexlab.commands import defaults
from vertexlab.commands.utils import EXIT_USAGE, curve_svg, fail
from vertexlab.config import Config
from vertexlab.constructions.registry import FamilyParams, build_family
from vertexlab.curves.curve import ClosedCurve
from vertexlab.curves.profile import CSV_HEADER, curvature_profile, profile_to_rows
from vertexlab.curves.vertices import inflection_report, vertex_report
from vertexlab.errors import ReportFormatError, VertexLabError
from vertexlab.reports import RunReport
from vertexlab.utils.formatting import SUITE_HEADER, csv_text, report_rows, write_text
from vertexlab.vllogging import logging

FORMATS = ("json", "csv", "svg")


def rebuilt_curve(report: RunReport) -> ClosedCurve:
    """The curve of a build report, rebuilt from its echoed arguments."""
    if report.command != "build" or not report.args.get("family"):
        raise ReportFormatError("Only build reports carry a curve")
    return build_family(report.args["family"], FamilyParams.from_config(report.args))


def export_text(report: RunReport, fmt: str) -> str:
    """Render a stored report as JSON, CSV or the SVG drawing of its curve.

    The CSV of a build report is the curvature profile that ``build`` writes; the CSV of a
    verification report lists its suite cases.

    Raises:
        ReportFormatError: a curve format was asked for a report without a built curve.
    """
    if fmt == "json":
        return report.to_json()
    if fmt == "csv" and report.command != "build":
        if not report.suites:
            raise ReportFormatError("Report has neither a curve nor suite cases")
        return csv_text(SUITE_HEADER, report_rows(report.to_dict()))
    curve = rebuilt_curve(report)
    if fmt == "csv":
        return csv_text(CSV_HEADER, profile_to_rows(curvature_profile(curve)))
    tol = float(report.args.get("tol") or defaults.tol)
    return curve_svg(curve, vertex_report(curve, tol=tol), inflection_report(curve, tol=tol))


class ExportCommand:
    """
    Executes the ``export`` command, which converts a stored JSON report into another format.

    Formats:
    - ``json``: the report normalized to sorted keys and two space indentation.
    - ``csv``: the ``t,s,x,y,kappa,kappa_prime`` profile of a build report, byte for byte what
      ``build`` wrote, or the ``suite,case,status,message`` rows of a verification report.
    - ``svg``: the curve of a build report with its vertex and inflection markers.

    The output goes next to the report with the new extension unless ``--output`` is given.
    Equal inputs give equal bytes.

    Example usage:
    >>> vertexlab export ./vertexlab-out/cyl2v.json --format svg
    """

    @staticmethod
    def run(cli: "vertexlab.cli"):
        r"""Export a report."""
        config = cli.config
        path = os.path.expanduser(config.report)
        try:
            with open(path) as f:
                report = RunReport.from_json(f.read())
        except OSError as e:
            fail("Cannot read report {}: {}".format(path, e), EXIT_USAGE)
        try:
            text = export_text(report, config.format)
        except VertexLabError as e:
            fail("{}: {}".format(type(e).__name__, e))
        output = config.get("output") or os.path.splitext(path)[0] + "." + config.format
        write_text(output, text)
        logging.success("Exported", output)

    @staticmethod
    def check_config(config: "Config"):
        if config.get("format") not in FORMATS:
            fail("Unknown format: {}. Expected one of: {}".format(config.get("format"), ", ".join(FORMATS)), EXIT_USAGE)

    @staticmethod
    def add_args(parser: argparse.ArgumentParser):
        export_parser = parser.add_parser("export", help="""Convert a report to JSON, CSV or SVG.""")
        export_parser.add_argument("report", type=str, help="Path of a JSON report.")
        export_parser.add_argument(
            "--format", type=str, default=defaults.export.format, choices=FORMATS, help="Output format."
        )
        export_parser.add_argument("--output", type=str, default=None, help="Output file.")
        vertexlab.logging.add_args(export_parser)
