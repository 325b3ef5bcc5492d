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
import time

import vertexlab
from vertexlab.commands.utils import (
    EXIT_FAILURE,
    EXIT_USAGE,
    add_run_args,
    args_echo,
    check_positive_int,
    fail,
    output_path,
)
from vertexlab.config import Config
from vertexlab.reports import RunReport
from vertexlab.suites import SuiteOptions, run_suites, suite_names
from vertexlab.utils.formatting import write_text
from vertexlab.vllogging import logging

VERIFY_KEYS = ["suite", "seed", "n", "samples", "tol"]


def verify_report(config: "Config") -> RunReport:
    start = time.perf_counter()
    options = SuiteOptions.from_config(config)
    timing = bool(config.get("timing"))
    report = RunReport(
        command="verify",
        args=args_echo(config, VERIFY_KEYS),
        suites=run_suites(config.suite, options, timing=timing),
    )
    if timing:
        report.elapsed = time.perf_counter() - start
    return report


class VerifyCommand:
    """
    Executes the ``verify`` command, which runs a named verification suite and reports every
    case. The exit status is 0 when all cases pass and 1 otherwise; the first failing case is
    printed to stderr.

    Suites:
    - ``kneser``: random simple closed curves have at least four vertices, also after transfer
      to the sphere and the half plane.
    - ``maps``: chart transfers and isometries keep vertex counts and parameters.
    - ``neck-limit``: the small amplitude limit of the neck perturbation.
    - ``dichotomy``: the sphere neck has at least four vertices, other necks exactly two.
    - ``jackson``: small geodesic circles have two vertices where the curvature gradient is large.
    - ``families``: vertex counts of the flat and hyperbolic families.
    - ``moebius-inflections``: antipodally symmetric sphere curves have at least six inflections.
    - ``cylinder``: the two vertex cylinder curve and its polar source.
    - ``profiles``: constant curvature neck profiles.
    - ``all``: every suite above.

    Optional arguments:
    - ``--n``: number of random curves for the property suites.
    - ``--seed``: seed of the random curves.
    - ``--samples``: grid size per period.
    - ``--out``: also write ``verify-<suite>.json`` to this directory.

    Example usage:
    >>> vertexlab verify kneser --n 200 --seed 7
    >>> vertexlab verify dichotomy
    """

    @staticmethod
    def run(cli: "vertexlab.cli"):
        r"""Run a suite and exit with its status."""
        config = cli.config
        report = verify_report(config)
        if config.get("out"):
            filename = "verify-{}.json".format(config.suite)
            report.files = [filename]
            write_text(output_path(config.out, filename), report.to_json())
        text = report.to_json()
        print(text, end="")
        if report.passed:
            logging.success("Verified", config.suite)
            return
        for suite in report.suites:
            case = suite.first_failure
            if case is not None:
                fail("{}/{} failed: {}".format(suite.name, case.name, case.message or case.details), EXIT_FAILURE)

    @staticmethod
    def check_config(config: "Config"):
        if config.get("suite") not in suite_names():
            fail(
                "Unknown suite: {}. Expected one of: {}".format(config.get("suite"), ", ".join(suite_names())),
                EXIT_USAGE,
            )
        check_positive_int(config, "samples")
        check_positive_int(config, "n")

    @staticmethod
    def add_args(parser: argparse.ArgumentParser):
        verify_parser = parser.add_parser("verify", help="""Run a verification suite.""")
        verify_parser.add_argument("suite", type=str, help="Suite name, or all.")
        add_run_args(verify_parser, out=None)
        vertexlab.logging.add_args(verify_parser)
