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

import pytest
from munch import Munch

from vertexlab.curves.sampling import ellipse
from vertexlab.errors import UnknownSuiteError
from vertexlab.suites import SUITES, SuiteOptions, run_suites, suite_names

FAST = ["cylinder", "families", "neck-limit", "dichotomy", "profiles", "maps"]


def assert_passed(result):
    failure = result.first_failure
    assert result.passed, "{}: {} {}".format(failure.name, failure.message, failure.details)


@pytest.mark.parametrize("name", FAST)
def test_suite_passes(name):
    assert_passed(SUITES[name](SuiteOptions()))


def test_jackson_circles():
    assert_passed(SUITES["jackson"](SuiteOptions()))


@pytest.mark.parametrize("name", ["kneser", "moebius-inflections"])
def test_property_suites_on_a_few_seeds(name):
    result = SUITES[name](SuiteOptions(n=5, seed=11))
    assert len(result.cases) == 5
    assert_passed(result)


@pytest.mark.parametrize("name", ["cylinder", "dichotomy", "families", "jackson", "maps"])
def test_counts_survive_a_finer_grid(name):
    assert_passed(SUITES[name](SuiteOptions(samples=8192)))


@pytest.mark.parametrize("name", ["kneser", "moebius-inflections"])
def test_random_counts_survive_a_finer_grid(name):
    assert_passed(SUITES[name](SuiteOptions(n=3, seed=0, samples=8192)))


@pytest.mark.parametrize(
    "name, case",
    [
        ("cylinder", "polar-two-vertices"),
        ("cylinder", "cyl2v-two-vertices"),
        ("kneser", "seed=0"),
        ("moebius-inflections", "seed=0"),
        ("jackson", "radius=0.01"),
    ],
)
def test_counts_are_repeated_on_a_doubled_grid(name, case):
    result = SUITES[name](SuiteOptions(n=1, seed=0))
    (found,) = [c for c in result.cases if c.name == case]
    assert found.passed
    details = found.details
    count = details["counts"][0] if "counts" in details else details["count"]
    assert details["count_doubled"] == count


def test_options_from_config():
    options = SuiteOptions.from_config(Munch({"seed": 3, "n": 7, "samples": None, "tol": None}))
    assert options == SuiteOptions(seed=3, n=7, samples=None, tol=options.tol)
    assert options.tol > 0.0
    curve = ellipse()
    assert options.sized(curve) is curve
    assert SuiteOptions(samples=512).sized(curve).samples == 512


def test_run_suites_records_timing():
    (result,) = run_suites("profiles", SuiteOptions(), timing=True)
    assert result.elapsed is not None
    assert "elapsed" in result.to_dict()


def test_suite_names():
    assert suite_names()[-1] == "all"
    assert set(suite_names()[:-1]) == set(SUITES)
    with pytest.raises(UnknownSuiteError):
        run_suites("nope", SuiteOptions())
