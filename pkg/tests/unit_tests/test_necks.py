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

import numpy as np
import pytest

from vertexlab.constructions import necks
from vertexlab.curves.vertices import vertex_report
from vertexlab.errors import DomainError, ParameterError
from vertexlab.geometry.revolution import RevolutionSurface, gauss_curvature_revolution

TWO_PI = 2.0 * np.pi


class TestConstantCurvatureProfile:
    @pytest.mark.parametrize("K", [-1.0, 0.0, 1.0])
    @pytest.mark.parametrize("L", [1.0, TWO_PI])
    def test_curvature_and_neck_length(self, K, L):
        surface = necks.constant_curvature_profile(K, L)
        t = np.linspace(surface.interval[0], surface.interval[1], 101)
        assert np.max(np.abs(gauss_curvature_revolution(surface, t) - K)) < 1e-6
        assert abs(TWO_PI * surface.r(np.zeros(1))[0] - L) < 1e-8
        assert surface.has_neck_at(0.0)

    def test_flat_profile_is_cylinder(self):
        surface = necks.constant_curvature_profile(0.0, TWO_PI, eps=2.0)
        assert surface.interval == (-2.0, 2.0)
        assert np.allclose(surface.r(np.linspace(-2.0, 2.0, 5)), 1.0)

    def test_long_interval_is_clamped(self, mocker):
        warning = mocker.spy(necks.logging, "warning")
        surface = necks.constant_curvature_profile(1.0, TWO_PI, eps=10.0)
        assert surface.interval[1] == pytest.approx(necks.CLAMP_FRACTION * np.pi / 2.0)
        assert warning.call_count == 1

    def test_rejects_bad_length(self):
        with pytest.raises(ParameterError):
            necks.constant_curvature_profile(1.0, 0.0)

    def test_literal_profile_has_inverse_square_curvature(self):
        surface = necks.literal_constant_curvature_profile(2.0, TWO_PI)
        assert gauss_curvature_revolution(surface, np.zeros(1))[0] == pytest.approx(0.25, abs=1e-9)
        negative = necks.literal_constant_curvature_profile(-2.0, TWO_PI)
        assert gauss_curvature_revolution(negative, np.zeros(1))[0] == pytest.approx(-0.25, abs=1e-9)


class TestNeckPerturbation:
    def test_closes_through_rotation(self):
        curve = necks.neck_perturbation(necks.neck_profile("cosh"), 0.1)
        assert curve.period == pytest.approx(TWO_PI)
        assert curve.deck_power == 1
        assert curve.closure_residual() < 1e-12

    def test_needs_a_neck(self):
        off_center = necks.neck_profile("cosh")
        shifted = RevolutionSurface(
            r=lambda t: np.cosh(np.asarray(t) + 0.3),
            r1=lambda t: np.sinh(np.asarray(t) + 0.3),
            r2=lambda t: np.cosh(np.asarray(t) + 0.3),
            h1=off_center.h1,
            h2=off_center.h2,
            interval=off_center.interval,
            normalized=True,
        )
        with pytest.raises(ParameterError):
            necks.neck_perturbation(shifted, 0.1)

    def test_amplitude_must_fit_interval(self):
        with pytest.raises(DomainError):
            necks.neck_perturbation(necks.neck_profile("cosh", eps=0.5), 0.6)

    @pytest.mark.parametrize("kind,expected", [("cylinder", 1.0), ("cos", 0.0), ("cosh", 2.0)])
    def test_limit_constant(self, kind, expected):
        assert necks.neck_limit_constant(necks.neck_profile(kind)) == pytest.approx(expected, abs=1e-12)

    @pytest.mark.parametrize("kind", ["cylinder", "cosh"])
    def test_taylor_limit(self, kind):
        surface = necks.neck_profile(kind)
        c = necks.neck_limit_constant(surface)
        assert necks.neck_taylor_residual(surface, 1e-3) < 1e-2 * abs(c)

    def test_arclength_limit_constant(self):
        # r'' per unit height: a unit sphere neck has C = 0
        surface = necks.constant_curvature_profile(1.0, TWO_PI)
        assert necks.neck_limit_constant(surface) == pytest.approx(0.0, abs=1e-12)

    @pytest.mark.parametrize("K", [0.0, -1.0])
    def test_two_vertices_away_from_the_round_sphere(self, K, small_samples):
        curve = necks.neck_perturbation(necks.constant_curvature_profile(K, TWO_PI), 0.1)
        assert vertex_report(curve).count == 2

    def test_round_sphere_neck_has_more_vertices(self, small_samples):
        curve = necks.neck_perturbation(necks.constant_curvature_profile(1.0, TWO_PI), 0.1)
        assert vertex_report(curve).count >= 4


class TestJackson:
    def test_surface_curvature_has_gradient(self):
        surface = necks.jackson_surface()
        t0 = necks.JACKSON_CENTER[1]
        h = 1e-4
        dk = (surface.gauss_curvature(np.array([t0 + h])) - surface.gauss_curvature(np.array([t0 - h])))[0] / (2 * h)
        assert abs(dk) / np.sqrt(surface.metric_E(np.array([t0]))[0]) > 0.1

    def test_small_circle_has_two_vertices(self):
        curve = necks.jackson_circle(0.03)
        assert vertex_report(curve, n=1024).count == 2
