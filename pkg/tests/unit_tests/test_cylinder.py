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

from vertexlab.constructions import cylinder
from vertexlab.curves.vertices import same_parameters, vertex_report
from vertexlab.errors import DomainError, ParameterError
from vertexlab.geometry.charts import ChartKind
from vertexlab.maps.deck import DeckKind
from vertexlab.utils import central_derivative


@pytest.fixture(scope="module")
def polar():
    return cylinder.polar_cos5_curve()


@pytest.fixture(scope="module")
def cyl2v():
    return cylinder.two_vertex_cylinder_curve()


class TestPolarCurve:
    def test_kappa_prime_matches_differenced_curvature(self, polar):
        theta = np.linspace(0.0, cylinder.POLAR_PERIOD, 1000, endpoint=False)
        numeric = central_derivative(polar.geodesic_curvature, theta, polar.period / 4096, 1)
        exact = cylinder.kappa_prime_formula(theta)
        assert np.max(np.abs(numeric - exact)) / np.max(np.abs(exact)) < 1e-6

    def test_kappa_prime_value(self):
        assert float(cylinder.kappa_prime_formula(5.0 * np.pi / 4.0)) == pytest.approx(
            192.0 / 13.0**2.5, abs=1e-12
        )

    def test_radius(self, polar):
        theta = polar.grid(64)
        radius = np.linalg.norm(polar.position(theta), axis=1)
        np.testing.assert_allclose(radius, np.abs(np.cos(theta / 5.0)), atol=1e-14)

    def test_speed(self, polar):
        theta = polar.grid(64)
        speed = np.linalg.norm(polar.derivative(theta, 1), axis=1)
        np.testing.assert_allclose(speed, cylinder.polar_speed(theta), rtol=1e-12)

    def test_two_vertices(self, polar):
        report = vertex_report(polar)
        assert report.count == 2
        assert report.nondegenerate
        assert same_parameters(report.parameters, np.array([0.0, 2.5 * np.pi]), polar.period)


class TestTwoVertexCylinderCurve:
    def test_quotient(self, cyl2v):
        assert cyl2v.period == pytest.approx(5.0 * np.pi)
        assert cyl2v.quotient.generator.kind == DeckKind.EUCL_TRANSLATION
        assert cyl2v.params["a"] == cylinder.DEFAULT_A
        x = cyl2v.position(cyl2v.grid(8192))[:, 0]
        assert cyl2v.params["L"] == pytest.approx(cylinder.STRIP_FACTOR * (x.max() - x.min()))

    def test_two_nondegenerate_vertices(self, cyl2v):
        report = vertex_report(cyl2v)
        assert report.count == 2
        assert report.nondegenerate
        assert vertex_report(cyl2v, n=2 * cyl2v.samples).count == 2

    def test_differenced_derivatives_agree(self, cyl2v):
        assert vertex_report(cyl2v.without_derivatives()).count == 2

    def test_inverts_back_to_the_polar_curve(self, cyl2v, polar):
        back = cylinder.polar_from_cylinder_curve(cyl2v)
        t = cyl2v.grid(4096)
        assert np.max(np.linalg.norm(back.position(t) - polar.position(t), axis=1)) < 1e-10

    def test_matches_written_formula(self, cyl2v):
        t = cyl2v.grid(4096)
        formula = cylinder.cylinder_curve_formula()
        assert np.max(np.linalg.norm(formula(t) - cyl2v.position(t), axis=1)) < 1e-10

    def test_explicit_circumference(self):
        assert cylinder.two_vertex_cylinder_curve(L=7.0).quotient.generator.L == 7.0

    @pytest.mark.parametrize("a", [0.0, -0.1, float(np.cos(np.pi / 5.0))])
    def test_rejects_vanishing_denominator(self, a):
        with pytest.raises(ParameterError):
            cylinder.two_vertex_cylinder_curve(a)


class TestHyperbolicCopies:
    def test_copies_keep_two_vertices(self):
        copies = cylinder.rescaled_hyperbolic_copies(copies=3)
        assert [c.params["copy"] for c in copies] == [0, 1, 2]
        assert all(c.ambient.kind == ChartKind.HALF_PLANE for c in copies)
        assert [vertex_report(c).count for c in copies] == [2, 2, 2]

    def test_copies_are_scaled(self):
        base, scaled = cylinder.rescaled_hyperbolic_copies(L=0.5, copies=2)
        t = base.grid(16)
        np.testing.assert_allclose(scaled.position(t), np.exp(0.5) * base.position(t), rtol=1e-12)

    def test_bad_arguments(self):
        with pytest.raises(ParameterError):
            cylinder.rescaled_hyperbolic_copies(copies=0)
        with pytest.raises(ParameterError):
            cylinder.rescaled_hyperbolic_copies(L=0.0)
        with pytest.raises(DomainError):
            cylinder.rescaled_hyperbolic_copies(height=1e-6)


class TestCusp:
    def test_surface_curvature(self):
        surface = cylinder.cusp_surface(2.0, (-1.0, 1.0))
        s = np.linspace(-0.9, 0.9, 7)
        np.testing.assert_allclose(surface.gauss_curvature(s), -np.exp(-4.0), rtol=1e-9)
        assert float(surface.r(np.array([0.0]))[0]) == pytest.approx(1.0)

    def test_deep_cusp_keeps_two_vertices(self):
        curve = cylinder.cusp_transplant(depth=8.0)
        assert curve.quotient.generator.L == pytest.approx(2.0 * np.pi)
        assert vertex_report(curve).count == 2
