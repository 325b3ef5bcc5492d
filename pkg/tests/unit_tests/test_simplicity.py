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

import numpy as np
import pytest

from vertexlab.constructions import cylinder, families
from vertexlab.curves.sampling import ellipse, fourier_curve
from vertexlab.errors import DeckInvarianceError
from vertexlab.maps.simplicity import SimplicityStatus, quotient_simplicity_check


def figure_eight():
    return fourier_curve([[0.0, 0.0], [0.0, 0.0]], [[0.0, 1.0], [1.0, 0.0]], samples=2048)


def test_ellipse_is_simple():
    report = quotient_simplicity_check(ellipse())
    assert report.simple
    assert report.witnesses == ()
    assert report.to_dict() == {"simple": True, "status": "simple", "witnesses": []}


def test_figure_eight_crosses_itself():
    curve = figure_eight()
    report = quotient_simplicity_check(curve)
    assert report.status == SimplicityStatus.SELF_INTERSECTING
    assert len(report.witnesses) >= 1
    for t1, t2 in report.witnesses:
        assert t1 <= t2
        gap = np.linalg.norm(curve.position(np.array([t1])) - curve.position(np.array([t2])))
        assert gap < 1e-2
        assert t2 - t1 > 0.1


def test_verdict_is_stable_under_doubling():
    for curve in (ellipse(), figure_eight()):
        coarse = quotient_simplicity_check(curve, resolution=1024)
        fine = quotient_simplicity_check(curve, resolution=2048)
        assert coarse.status == fine.status


@pytest.mark.parametrize("lam", [1e-3, 5e-2, 1e-1])
def test_small_perturbations_are_simple(lam):
    assert quotient_simplicity_check(families.flat_translation_perturbation(1.0, lam)).simple
    assert quotient_simplicity_check(families.horocycle_perturbation(1.0, 1.0, lam)).simple
    assert quotient_simplicity_check(families.hyperbolic_glide_perturbation(1.0, lam)).simple


def test_large_graph_perturbation_stays_simple():
    assert quotient_simplicity_check(families.flat_translation_perturbation(1.0, 10.0)).simple


def test_curve_off_its_deck_motion():
    curve = families.flat_glide_perturbation(1.0, 0.05)
    shifted = dataclasses.replace(
        curve,
        evaluator=lambda t: curve.position(t) + [0.0, 0.2],
        derivative_evaluators=(),
    )
    with pytest.raises(DeckInvarianceError):
        quotient_simplicity_check(shifted)


def test_narrow_cylinder_makes_translates_cross():
    curve = cylinder.two_vertex_cylinder_curve()
    narrow = cylinder.two_vertex_cylinder_curve(L=curve.params["L"] / 4.0)
    report = quotient_simplicity_check(narrow)
    assert report.status == SimplicityStatus.SELF_INTERSECTING
