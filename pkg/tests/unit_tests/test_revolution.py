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

from vertexlab.constructions.necks import neck_perturbation, neck_profile
from vertexlab.errors import DomainError, ParameterError
from vertexlab.geometry.revolution import (
    arclength_gauss_curvature,
    cylinder,
    gauss_curvature_revolution,
    intrinsic_geodesic_curvature,
    neck_closed_form_curvature,
    revolution_geodesic_curvature,
)
from vertexlab.constructions.necks import constant_curvature_profile

T = np.linspace(-0.4, 0.4, 17)


class TestGaussCurvature:
    def test_cylinder_is_flat(self):
        assert np.allclose(gauss_curvature_revolution(cylinder(2.0), T), 0.0)
        assert np.allclose(arclength_gauss_curvature(cylinder(2.0), T), 0.0)

    def test_catenoid(self):
        surface = neck_profile("cosh")
        assert np.allclose(gauss_curvature_revolution(surface, T), -1.0 / np.cosh(T) ** 4)

    def test_cos_profile(self):
        surface = neck_profile("cos")
        assert np.allclose(gauss_curvature_revolution(surface, T), 1.0 / (1.0 + np.sin(T) ** 2) ** 2)

    def test_arclength_shortcut_needs_arclength_profile(self):
        with pytest.raises(ParameterError):
            arclength_gauss_curvature(neck_profile("cosh"), T)

    @pytest.mark.parametrize("K", [-1.0, 1.0])
    def test_arclength_shortcut_agrees(self, K):
        surface = constant_curvature_profile(K, 2.0 * np.pi)
        assert np.allclose(arclength_gauss_curvature(surface, T), gauss_curvature_revolution(surface, T))

    def test_outside_interval(self):
        with pytest.raises(DomainError):
            gauss_curvature_revolution(neck_profile("cosh", eps=0.5), np.array([0.9]))


def test_embedding_of_cylinder():
    point = cylinder(2.0).embedding(np.array([[np.pi / 2.0, 0.3]]))[0]
    assert np.allclose(point, [0.0, 2.0, 0.3], atol=1e-15)


def test_parallel_of_cylinder_is_geodesic():
    surface = cylinder(1.5)
    theta = np.linspace(0.0, 2.0 * np.pi, 9)
    points = np.stack([theta, np.full_like(theta, 0.2)], axis=1)
    d1 = np.tile([1.0, 0.0], (theta.size, 1))
    assert np.allclose(surface.geodesic_curvature(points, d1, np.zeros_like(d1)), 0.0, atol=1e-15)


class TestNeckCurvature:
    @pytest.mark.parametrize("kind", ["cylinder", "cos", "cosh"])
    @pytest.mark.parametrize("lam", [1e-3, 1e-2, 1e-1])
    def test_closed_form_matches_general_evaluation(self, kind, lam):
        surface = neck_profile(kind)
        curve = neck_perturbation(surface, lam)
        theta = curve.grid(256)
        general = revolution_geodesic_curvature(surface, curve, theta)
        exact = neck_closed_form_curvature(surface, lam, theta)
        scale = np.max(np.abs(exact))
        assert np.max(np.abs(general - exact)) < 1e-9 * max(scale, 1e-12)

    @pytest.mark.parametrize("kind", ["cylinder", "cos", "cosh"])
    def test_christoffel_form_agrees(self, kind):
        surface = neck_profile(kind)
        curve = neck_perturbation(surface, 0.1)
        theta = curve.grid(128)
        general = revolution_geodesic_curvature(surface, curve, theta)
        intrinsic = intrinsic_geodesic_curvature(surface, *curve.derivatives(theta, 2))
        assert np.allclose(intrinsic, general, rtol=1e-9, atol=1e-12)

    def test_cylinder_neck_closed_form(self):
        surface = neck_profile("cylinder")
        theta = np.linspace(0.0, 2.0 * np.pi, 33)
        lam = 0.05
        expected = lam * np.cos(theta) / (1.0 + lam**2 * np.sin(theta) ** 2) ** 1.5
        assert np.allclose(neck_closed_form_curvature(surface, lam, theta), expected)

    def test_closed_form_needs_normalized_profile(self):
        with pytest.raises(ParameterError):
            neck_closed_form_curvature(constant_curvature_profile(-1.0, 2.0 * np.pi), 0.01, np.zeros(3))

    def test_closed_form_outside_interval(self):
        with pytest.raises(DomainError):
            neck_closed_form_curvature(neck_profile("cosh", eps=0.5), 1.0, np.zeros(3))
