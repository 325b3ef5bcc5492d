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

from vertexlab.constructions import families
from vertexlab.curves.sampling import ellipse
from vertexlab.curves.vertices import same_parameters, vertex_report
from vertexlab.errors import DomainError, ParameterError, PoleError
from vertexlab.geometry.charts import EUCLIDEAN, HALF_PLANE, SPHERE_STEREO, ChartKind
from vertexlab.maps.deck import (
    DeckKind,
    DeckMotion,
    QuotientModel,
    check_deck_invariance,
    deck_apply,
    project_to_fundamental_domain,
    pullback_residual,
)
from vertexlab.maps.mobius import MobiusKind, MobiusMap, mobius_apply, random_mobius
from vertexlab.maps.transfer import (
    TransferDirection,
    antipodal_map,
    halfplane_inclusion_transfer,
    stereographic_transfer,
)

POINTS = np.array([[0.3, 0.7], [-1.2, 2.0], [2.5, 0.1]])


class TestDeckMotion:
    def test_glide_squares_to_a_translation(self):
        glide = DeckMotion(DeckKind.EUCL_GLIDE, 1.5)
        np.testing.assert_allclose(glide.apply(POINTS, 2), POINTS + [3.0, 0.0])
        np.testing.assert_allclose(glide.apply(POINTS), POINTS * [1.0, -1.0] + [1.5, 0.0])
        assert glide.orientation() == -1
        assert glide.orientation(2) == 1

    def test_hyperbolic_glide_linear_part(self):
        glide = DeckMotion(DeckKind.HYP_GLIDE, 0.5)
        np.testing.assert_allclose(glide.linear_part(), np.diag([-np.exp(0.5), np.exp(0.5)]))
        np.testing.assert_allclose(glide.linear_part(2), np.exp(1.0) * np.eye(2))

    @pytest.mark.parametrize("kind", list(DeckKind))
    def test_negative_power_inverts(self, kind):
        motion = DeckMotion(kind, 0.8)
        np.testing.assert_allclose(motion.apply(motion.apply(POINTS), -1), POINTS, atol=1e-14)

    def test_rejects_nonpositive_length(self):
        with pytest.raises(ParameterError):
            DeckMotion(DeckKind.PARABOLIC, 0.0)

    def test_describe(self):
        quotient = QuotientModel(HALF_PLANE, DeckMotion(DeckKind.HYP_TRANSLATION, 1.0))
        described = quotient.describe()
        assert described["generator"] == {"kind": "hyperbolic-translation", "L": 1.0}
        assert described["fundamental_domain"]["shape"] == "annulus"
        assert described["fundamental_domain"]["outer"] == pytest.approx(np.e)


class TestFundamentalDomain:
    def test_strip(self):
        quotient = QuotientModel(EUCLIDEAN, DeckMotion(DeckKind.EUCL_TRANSLATION, 1.0))
        projected = project_to_fundamental_domain(np.array([[2.25, 0.5], [-0.75, 1.0]]), quotient)
        np.testing.assert_allclose(projected, [[0.25, 0.5], [0.25, 1.0]], atol=1e-14)

    def test_glide_strip_flips(self):
        quotient = QuotientModel(EUCLIDEAN, DeckMotion(DeckKind.EUCL_GLIDE, 1.0))
        projected = project_to_fundamental_domain(np.array([[1.25, 0.5]]), quotient)
        np.testing.assert_allclose(projected, [[0.25, -0.5]], atol=1e-14)

    def test_annulus(self):
        quotient = QuotientModel(HALF_PLANE, DeckMotion(DeckKind.HYP_TRANSLATION, 1.0))
        projected = project_to_fundamental_domain(POINTS, quotient)
        radius = np.hypot(*projected.T)
        assert np.all(radius >= 1.0 - 1e-12)
        assert np.all(radius < np.e)

    def test_origin_is_fixed(self):
        quotient = QuotientModel(HALF_PLANE, DeckMotion(DeckKind.HYP_TRANSLATION, 1.0))
        with pytest.raises(DomainError):
            project_to_fundamental_domain(np.zeros((1, 2)), quotient)


class TestInvariance:
    def test_families_close_under_their_motion(self):
        curve = families.flat_glide_perturbation(1.0, 0.05)
        assert check_deck_invariance(curve, curve.quotient.generator) < 1e-12

    def test_plain_function_needs_probes(self):
        with pytest.raises(ParameterError):
            check_deck_invariance(lambda t: t, DeckMotion(DeckKind.EUCL_TRANSLATION, 1.0))

    def test_deck_apply_moves_the_curve(self):
        curve = ellipse()
        motion = DeckMotion(DeckKind.EUCL_GLIDE, 2.0)
        moved = deck_apply(motion, curve)
        t = curve.grid(32)
        np.testing.assert_allclose(moved.position(t), motion.apply(curve.position(t)))
        np.testing.assert_allclose(moved.derivative(t, 1), curve.derivative(t, 1) * [1.0, -1.0])
        np.testing.assert_allclose(
            np.abs(moved.geodesic_curvature(t)), np.abs(curve.geodesic_curvature(t)), rtol=1e-10
        )

    @pytest.mark.parametrize(
        "kind,chart",
        [
            (DeckKind.EUCL_TRANSLATION, EUCLIDEAN),
            (DeckKind.EUCL_GLIDE, EUCLIDEAN),
            (DeckKind.PARABOLIC, HALF_PLANE),
            (DeckKind.HYP_TRANSLATION, HALF_PLANE),
            (DeckKind.HYP_GLIDE, HALF_PLANE),
        ],
    )
    def test_motions_are_isometries(self, kind, chart):
        assert pullback_residual(DeckMotion(kind, 0.7), chart, POINTS) < 1e-12

    def test_scaling_is_not_a_euclidean_isometry(self):
        assert pullback_residual(DeckMotion(DeckKind.HYP_TRANSLATION, 0.7), EUCLIDEAN, POINTS) > 0.1


class TestMobius:
    def test_singular_map(self):
        with pytest.raises(ParameterError):
            MobiusMap(1, 2, 2, 4)

    def test_half_plane_maps_are_real(self):
        with pytest.raises(ParameterError):
            MobiusMap(1j, 0, 0, 1, MobiusKind.HALF_PLANE)
        with pytest.raises(ParameterError):
            MobiusMap(0, 1, -1, 0, MobiusKind.HALF_PLANE, conjugate=True)

    def test_compose_with_inverse(self):
        mobius = MobiusMap(1 + 0.5j, 0.3, 0.2j, 1.1)
        z = np.array([0.1 + 0.2j, -1.0 + 0.5j, 2.0])
        np.testing.assert_allclose(mobius.compose(mobius.inverse())(z), z, atol=1e-13)
        np.testing.assert_allclose(mobius.inverse()(mobius(z)), z, atol=1e-13)

    def test_inversion(self):
        inversion = MobiusMap.inversion()
        z = np.exp(1j * np.linspace(0.0, 6.0, 7))
        np.testing.assert_allclose(inversion(z), z, atol=1e-14)
        assert inversion(np.array([2.0 + 0.0j]))[0] == pytest.approx(0.5)
        assert inversion.pole == 0

    def test_composition_order(self):
        shift, scale = MobiusMap.translation(1.0), MobiusMap(2, 0, 0, 1)
        assert shift.compose(scale)(np.array([1.0]))[0] == pytest.approx(3.0)
        assert scale.compose(shift)(np.array([1.0]))[0] == pytest.approx(4.0)

    def test_image_keeps_vertex_parameters(self):
        curve = ellipse()
        image = mobius_apply(MobiusMap(1, 0.2, 0.1, 1), curve)
        assert image.ambient.kind == ChartKind.EUCLIDEAN
        original, moved = vertex_report(curve), vertex_report(image)
        assert moved.count == 4
        assert same_parameters(original.parameters, moved.parameters, curve.period)

    def test_random_map_keeps_four_vertices(self):
        mobius = random_mobius(np.random.default_rng(3), spread=0.1)
        assert vertex_report(mobius_apply(mobius, ellipse())).count == 4

    def test_pole_on_the_curve(self):
        with pytest.raises(PoleError):
            mobius_apply(MobiusMap(1, 0, 1, -2), ellipse())

    def test_half_plane_map_needs_half_plane_curve(self):
        with pytest.raises(ParameterError):
            mobius_apply(MobiusMap.scaling(2.0), ellipse())

    def test_lifts_are_rejected(self):
        with pytest.raises(ParameterError):
            mobius_apply(MobiusMap.identity(), families.flat_translation_perturbation())


class TestTransfer:
    def test_sphere_transfer_keeps_vertex_parameters(self):
        curve = ellipse()
        sphere = stereographic_transfer(curve, TransferDirection.PLANE_TO_SPHERE)
        assert sphere.ambient is SPHERE_STEREO
        plane, moved = vertex_report(curve), vertex_report(sphere)
        assert moved.count == 4
        assert same_parameters(plane.parameters, moved.parameters, curve.period)
        back = stereographic_transfer(sphere, "sphere-to-plane")
        assert back.ambient is EUCLIDEAN

    def test_half_plane_transfer_keeps_vertex_parameters(self):
        curve = ellipse(center=(0.0, 3.0))
        hyperbolic = halfplane_inclusion_transfer(curve)
        assert hyperbolic.ambient is HALF_PLANE
        assert same_parameters(
            vertex_report(curve).parameters, vertex_report(hyperbolic).parameters, curve.period
        )
        assert halfplane_inclusion_transfer(hyperbolic).ambient is EUCLIDEAN

    def test_wrong_direction(self):
        with pytest.raises(ParameterError):
            stereographic_transfer(ellipse(), TransferDirection.SPHERE_TO_PLANE)

    def test_half_plane_domain(self):
        with pytest.raises(DomainError):
            halfplane_inclusion_transfer(ellipse())

    def test_deck_motion_must_stay_an_isometry(self):
        with pytest.raises(ParameterError):
            stereographic_transfer(families.flat_translation_perturbation(), TransferDirection.PLANE_TO_SPHERE)

    def test_antipodal_map_is_an_involution(self):
        np.testing.assert_allclose(antipodal_map(antipodal_map(POINTS)), POINTS, atol=1e-14)
        np.testing.assert_allclose(antipodal_map(np.array([[1.0, 0.0]])), [[-1.0, 0.0]])
        with pytest.raises(PoleError):
            antipodal_map(np.zeros((1, 2)))


def test_broken_period_is_not_invariant():
    L, lam = 1.0, 0.05

    def broken(t):
        t = np.asarray(t, dtype=float)
        return np.stack([t, lam * np.sin(2.0 * np.pi * t / (1.1 * L))], axis=1)

    motion = DeckMotion(DeckKind.EUCL_TRANSLATION, L)
    t = np.linspace(0.0, L, 64, endpoint=False)
    assert check_deck_invariance(broken, motion, reparam=lambda s: s + L, probes=t) > 0.01
    geodesic = families.flat_translation_perturbation(L, 0.0)
    assert check_deck_invariance(geodesic, motion) < 1e-14


def test_annulus_example():
    quotient = QuotientModel(HALF_PLANE, DeckMotion(DeckKind.HYP_TRANSLATION, 0.4))
    projected = project_to_fundamental_domain(np.array([[0.0, np.exp(2.5 * 0.4)]]), quotient)
    np.testing.assert_allclose(projected, [[0.0, np.exp(0.5 * 0.4)]], rtol=1e-12)
    np.testing.assert_allclose(project_to_fundamental_domain(projected, quotient), projected)
