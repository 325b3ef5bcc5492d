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
import time
from typing import Any, Callable, Dict, Optional

import numpy as np

from vertexlab.constructions import cylinder, families, necks
from vertexlab.curves.curve import ClosedCurve
from vertexlab.curves.sampling import (
    ellipse,
    fourier_curve,
    random_antipodal_sphere_curve,
    random_simple_closed_curve,
)
from vertexlab.curves.vertices import (
    DEFAULT_TOL,
    InflectionReport,
    VertexReport,
    inflection_report,
    same_parameters,
    vertex_report,
)
from vertexlab.errors import UnknownSuiteError, VertexLabError
from vertexlab.geometry.charts import EUCLIDEAN, HALF_PLANE
from vertexlab.geometry.revolution import (
    gauss_curvature_revolution,
    intrinsic_geodesic_curvature,
    neck_closed_form_curvature,
    revolution_geodesic_curvature,
)
from vertexlab.maps.deck import (
    DeckKind,
    DeckMotion,
    QuotientModel,
    check_deck_invariance,
    project_to_fundamental_domain,
    pullback_residual,
)
from vertexlab.maps.mobius import MobiusMap, mobius_apply, random_mobius
from vertexlab.maps.simplicity import quotient_simplicity_check
from vertexlab.maps.transfer import (
    TransferDirection,
    antipodal_map,
    halfplane_inclusion_transfer,
    stereographic_transfer,
)
from vertexlab.reports import SuiteResult
from vertexlab.utils import central_derivative
from vertexlab.vllogging import logging

KNESER_CURVES = 200
INFLECTION_CURVES = 50
AMPLITUDES = (1e-3, 1e-2, 1e-1)
LENGTHS = (0.5, 1.0, 3.0)
DECK_TOL = 1e-10
JACKSON_RADII = (0.01, 0.03, 0.05)
# Shot directions of a Jackson circle and its default grid.
JACKSON_DIRECTIONS = 256
JACKSON_SAMPLES = 1024
NECK_AMPLITUDES = (0.05, 0.1, 0.2)


@dataclasses.dataclass(frozen=True)
class SuiteOptions:
    """Knobs shared by the suites, read from the command configuration."""

    seed: int = 0
    n: Optional[int] = None
    samples: Optional[int] = None
    tol: float = DEFAULT_TOL

    @classmethod
    def from_config(cls, config: Any) -> "SuiteOptions":
        return cls(
            seed=int(config.get("seed") or 0),
            n=config.get("n"),
            samples=config.get("samples"),
            tol=float(config.get("tol") or DEFAULT_TOL),
        )

    def sized(self, curve: ClosedCurve) -> ClosedCurve:
        if self.samples is None:
            return curve
        return curve.with_samples(int(self.samples) * max(1, abs(curve.deck_power)))


def _vertices(curve: ClosedCurve, options: SuiteOptions, factor: int = 1) -> VertexReport:
    curve = options.sized(curve)
    return vertex_report(curve, n=curve.samples * factor, tol=options.tol)


def _inflections(curve: ClosedCurve, options: SuiteOptions, factor: int = 1) -> InflectionReport:
    curve = options.sized(curve)
    return inflection_report(curve, n=curve.samples * factor, tol=options.tol)


def _case(suite: SuiteResult, name: str, check: Callable[[], Dict[str, Any]]) -> None:
    """Run ``check``, which returns its details with a boolean ``passed``; library errors fail the case."""
    try:
        details = check()
        passed = bool(details.pop("passed"))
        suite.add(name, passed, **details)
    except VertexLabError as e:
        suite.add(name, False, message="{}: {}".format(type(e).__name__, e))
    case = suite.cases[-1]
    if case.passed:
        logging.debug("Case passed", "{}/{}".format(suite.name, name))
    else:
        logging.warning("Case failed", "{}/{} {}".format(suite.name, name, case.message))


def _stable_count(curve: ClosedCurve, options: SuiteOptions, expected: Callable[[Any], bool]) -> Dict[str, Any]:
    report = _vertices(curve, options)
    doubled = _vertices(curve, options, factor=2)
    return {
        "passed": expected(report.count) and report.count == doubled.count,
        "count": report.count,
        "count_doubled": doubled.count,
        "nondegenerate": report.nondegenerate,
    }


def _stable_inflections(curve: ClosedCurve, options: SuiteOptions, expected: Callable[[Any], bool]) -> Dict[str, Any]:
    report = _inflections(curve, options)
    doubled = _inflections(curve, options, factor=2)
    return {
        "passed": expected(report.count) and report.count == doubled.count,
        "count": report.count,
        "count_doubled": doubled.count,
    }


def cylinder_suite(options: SuiteOptions) -> SuiteResult:
    """Closed form curvature derivative of the polar curve and the two vertex cylinder curve."""
    suite = SuiteResult("cylinder")
    polar = options.sized(cylinder.polar_cos5_curve())

    def oracle():
        theta = np.linspace(0.0, cylinder.POLAR_PERIOD, 1000, endpoint=False)
        h = polar.period / 4096
        numeric = central_derivative(polar.geodesic_curvature, theta, h, 1)
        exact = cylinder.kappa_prime_formula(theta)
        error = float(np.max(np.abs(numeric - exact)) / np.max(np.abs(exact)))
        return {"passed": error < 1e-6, "relative_error": error}

    def formula_value():
        value = float(cylinder.kappa_prime_formula(5.0 * np.pi / 4.0))
        expected = 192.0 / 13.0**2.5
        return {"passed": abs(value - expected) < 1e-12, "value": value, "expected": expected}

    def polar_count():
        report = _vertices(polar, options)
        doubled = _vertices(polar, options, factor=2)
        t = report.parameters
        hits = same_parameters(t, np.array([0.0, 2.5 * np.pi]), polar.period, 1e-6)
        return {
            "passed": report.count == 2 == doubled.count and report.nondegenerate and hits,
            "vertices": t,
            "count": report.count,
            "count_doubled": doubled.count,
        }

    def cyl2v_count():
        curve = cylinder.two_vertex_cylinder_curve(cylinder.DEFAULT_A)
        details = _stable_count(curve, options, lambda c: c == 2)
        details["passed"] = details["passed"] and details["nondegenerate"]
        return details

    def cyl2v_differenced():
        curve = cylinder.two_vertex_cylinder_curve(cylinder.DEFAULT_A).without_derivatives()
        report = _vertices(curve, options)
        return {"passed": report.count == 2, "count": report.count}

    def inversion_identity():
        curve = cylinder.two_vertex_cylinder_curve(cylinder.DEFAULT_A)
        back = cylinder.polar_from_cylinder_curve(curve, cylinder.DEFAULT_A)
        t = curve.grid(4096)
        residual = float(np.max(np.linalg.norm(back.position(t) - polar.position(t), axis=1)))
        formula = cylinder.cylinder_curve_formula(cylinder.DEFAULT_A)
        displayed = float(np.max(np.linalg.norm(formula(t) - curve.position(t), axis=1)))
        return {
            "passed": residual < 1e-10 and displayed < 1e-10,
            "inversion_residual": residual,
            "formula_residual": displayed,
        }

    _case(suite, "kappa-prime-oracle", oracle)
    _case(suite, "kappa-prime-5pi/4", formula_value)
    _case(suite, "polar-two-vertices", polar_count)
    _case(suite, "cyl2v-two-vertices", cyl2v_count)
    _case(suite, "cyl2v-differenced", cyl2v_differenced)
    _case(suite, "inversion-identity", inversion_identity)
    return suite


def families_suite(options: SuiteOptions) -> SuiteResult:
    """Vertex counts and deck invariance of the perturbation families."""
    suite = SuiteResult("families")
    translations = {
        "flat-translation": families.flat_translation_perturbation,
        "horocycle": lambda L, lam: families.horocycle_perturbation(L, 1.0, lam),
        "hyp-translation": families.hyperbolic_translation_perturbation,
    }
    glides = {
        "flat-glide": families.flat_glide_perturbation,
        "hyp-glide": families.hyperbolic_glide_perturbation,
    }

    def counted(build, L, lam, expected, cover=1):
        def check():
            curve = build(L, lam)
            residual = curve.closure_residual()
            report = _vertices(curve.cover(cover), options)
            doubled = _vertices(curve.cover(cover), options, factor=2)
            return {
                "passed": report.count == expected == doubled.count and residual < DECK_TOL,
                "count": report.count,
                "count_doubled": doubled.count,
                "deck_residual": residual,
            }

        return check

    for name, build in translations.items():
        for L in LENGTHS:
            for lam in AMPLITUDES:
                _case(suite, "{} L={} lambda={}".format(name, L, lam), counted(build, L, lam, 2))
    for name, build in glides.items():
        for L in LENGTHS:
            for lam in AMPLITUDES:
                _case(suite, "{} L={} lambda={}".format(name, L, lam), counted(build, L, lam, 1))
                _case(suite, "{}x2 L={} lambda={}".format(name, L, lam), counted(build, L, lam, 2, cover=2))

    def geodesic(build):
        def check():
            report = _vertices(build(1.0, 0.0), options)
            return {"passed": report.all_critical, "count": report.count}

        return check

    for name, build in {**translations, **glides}.items():
        _case(suite, "{} lambda=0".format(name), geodesic(build))

    def hyperbolic_formula(formula, motion_kind):
        def check():
            L, lam = 1.0, 0.01
            t = np.exp(np.linspace(0.0, L, 64))
            residual = check_deck_invariance(
                formula(L, lam), DeckMotion(motion_kind, L), reparam=lambda s: np.exp(L) * s, probes=t
            )
            return {"passed": residual < 1e-12 * np.exp(2.0 * L), "residual": residual}

        return check

    _case(suite, "hyp-translation invariance", hyperbolic_formula(families.hyperbolic_translation_formula, DeckKind.HYP_TRANSLATION))
    _case(suite, "hyp-glide invariance", hyperbolic_formula(families.hyperbolic_glide_formula, DeckKind.HYP_GLIDE))

    def pair(build, lam):
        def check():
            plus, minus = build(1.0, lam, 0.5)
            residual = families.pair_invariance_residual((plus, minus))
            report = _vertices(plus, options)
            doubled = _vertices(plus, options, factor=2)
            simple = quotient_simplicity_check(plus)
            return {
                "passed": report.count == 2 == doubled.count and residual < 1e-12 and simple.simple,
                "count": report.count,
                "count_doubled": doubled.count,
                "pair_residual": residual,
                "simplicity": simple.to_dict(),
            }

        return check

    _case(suite, "pair-flat", pair(families.embedded_pair_flat, 0.05))
    _case(suite, "pair-hyp", pair(families.embedded_pair_hyperbolic, 0.01))

    def pair_reduction():
        plus, minus = families.embedded_pair_flat(1.0, 0.05, 0.0)
        glide = families.flat_glide_perturbation(1.0, 0.05).cover(2)
        t = plus.grid(256)
        gap = max(
            float(np.max(np.abs(plus.position(t) - glide.position(t)))),
            float(np.max(np.abs(minus.position(t) - glide.position(t)))),
        )
        return {"passed": gap < 1e-14, "gap": gap}

    _case(suite, "pair eps=0 reduction", pair_reduction)

    def c1_convergence():
        distances = [
            families.c1_distance(
                families.flat_translation_perturbation(1.0, lam), families.flat_translation_perturbation(1.0, 0.0)
            )
            for lam in AMPLITUDES
        ]
        ratios = [d / lam for d, lam in zip(distances, AMPLITUDES)]
        return {"passed": max(ratios) / min(ratios) < 1.0 + 1e-9, "distances": distances}

    _case(suite, "C1 convergence", c1_convergence)
    return suite


def kneser_suite(options: SuiteOptions) -> SuiteResult:
    """Random simple closed curves have at least four vertices in all three metrics."""
    suite = SuiteResult("kneser")
    count = KNESER_CURVES if options.n is None else int(options.n)

    def check(seed):
        def run():
            curve = random_simple_closed_curve(seed, center=(0.0, 3.0))
            plane = _vertices(curve, options)
            doubled = _vertices(curve, options, factor=2)
            sphere = _vertices(stereographic_transfer(curve, TransferDirection.PLANE_TO_SPHERE), options)
            hyperbolic = _vertices(halfplane_inclusion_transfer(curve), options)
            return {
                "passed": plane.count >= 4
                and plane.count == doubled.count
                and plane.count == sphere.count == hyperbolic.count
                and same_parameters(plane.parameters, sphere.parameters, curve.period)
                and same_parameters(plane.parameters, hyperbolic.parameters, curve.period),
                "counts": [plane.count, sphere.count, hyperbolic.count],
                "count_doubled": doubled.count,
            }

        return run

    for seed in range(options.seed, options.seed + count):
        _case(suite, "seed={}".format(seed), check(seed))
    return suite


def maps_suite(options: SuiteOptions) -> SuiteResult:
    """Vertex transfer through conformal maps, deck isometries and the simplicity check."""
    suite = SuiteResult("maps")
    rng = np.random.default_rng(options.seed)

    def transfer(name, curve, move, expected):
        def check():
            moved = move(curve)
            before = _vertices(curve, options)
            after = _vertices(moved, options)
            doubled = _vertices(moved, options, factor=2)
            if expected == "all":
                ok = before.all_critical and after.all_critical and doubled.all_critical
            else:
                ok = before.count == after.count == doubled.count == expected and same_parameters(
                    before.parameters, after.parameters, curve.period
                )
            return {"passed": ok, "counts": [before.count, after.count], "count_doubled": doubled.count}

        return check

    to_sphere = lambda c: stereographic_transfer(c, TransferDirection.PLANE_TO_SPHERE)  # noqa: E731
    circle = ellipse(1.0, 1.0)
    _case(suite, "ellipse sphere", transfer("ellipse", ellipse(), to_sphere, 4))
    _case(suite, "circle sphere", transfer("circle", circle, to_sphere, "all"))
    _case(suite, "polar sphere", transfer("polar", cylinder.polar_cos5_curve(), to_sphere, 2))
    _case(
        suite,
        "horocycle inclusion",
        transfer("horocycle", families.horocycle_perturbation(1.0, 1.0, 0.0), halfplane_inclusion_transfer, "all"),
    )
    placed = cylinder.rescaled_hyperbolic_copies(cylinder.DEFAULT_A, copies=1)[0]
    _case(suite, "cyl2v inclusion", transfer("cyl2v", placed, halfplane_inclusion_transfer, 2))
    _case(
        suite,
        "random mobius ellipse",
        transfer("ellipse", ellipse(), lambda c: mobius_apply(random_mobius(rng), c), 4),
    )
    _case(
        suite,
        "identity mobius",
        transfer("ellipse", ellipse(), lambda c: mobius_apply(MobiusMap.identity(), c), 4),
    )

    def copies():
        stable = [_stable_count(c, options, lambda n: n == 2) for c in cylinder.rescaled_hyperbolic_copies(copies=3)]
        return {
            "passed": all(s["passed"] for s in stable),
            "counts": [s["count"] for s in stable],
            "counts_doubled": [s["count_doubled"] for s in stable],
        }

    _case(suite, "hyp-cyl2v copies", copies)

    def cusp():
        return _stable_count(cylinder.cusp_transplant(depth=8.0), options, lambda n: n == 2)

    _case(suite, "cusp-cyl2v", cusp)

    charts = {
        DeckKind.EUCL_TRANSLATION: EUCLIDEAN,
        DeckKind.EUCL_GLIDE: EUCLIDEAN,
        DeckKind.PARABOLIC: HALF_PLANE,
        DeckKind.HYP_TRANSLATION: HALF_PLANE,
        DeckKind.HYP_GLIDE: HALF_PLANE,
    }

    def isometry(kind, chart):
        def check():
            points = np.stack([rng.uniform(-2.0, 2.0, 100), rng.uniform(0.1, 3.0, 100)], axis=1)
            residual = pullback_residual(DeckMotion(kind, 0.7), chart, points)
            return {"passed": residual < 1e-10, "residual": residual}

        return check

    for kind, chart in charts.items():
        _case(suite, "isometry {}".format(kind.value), isometry(kind, chart))

    def fundamental_domain():
        strip = QuotientModel(EUCLIDEAN, DeckMotion(DeckKind.EUCL_TRANSLATION, 1.0))
        annulus = QuotientModel(HALF_PLANE, DeckMotion(DeckKind.HYP_TRANSLATION, 1.0))
        a = project_to_fundamental_domain(np.array([[2.3, 0.5]]), strip)[0]
        b = project_to_fundamental_domain(np.array([[0.0, np.exp(2.5)]]), annulus)[0]
        ok = np.allclose(a, [0.3, 0.5], atol=1e-12) and np.allclose(b, [0.0, np.exp(0.5)], rtol=1e-12)
        return {"passed": bool(ok), "strip": a, "annulus": b}

    _case(suite, "fundamental domain", fundamental_domain)

    def broken_invariance():
        motion = DeckMotion(DeckKind.EUCL_TRANSLATION, 1.0)

        def broken(t):
            return np.stack([t, 0.5 * np.sin(2.0 * np.pi * t / 1.1)], axis=1)

        residual = check_deck_invariance(broken, motion, reparam=lambda t: t + 1.0, probes=np.linspace(0, 1, 64))
        return {"passed": residual > 0.01, "residual": residual}

    _case(suite, "broken invariance", broken_invariance)

    def simplicity():
        small = quotient_simplicity_check(families.flat_translation_perturbation(1.0, 0.05))
        large = quotient_simplicity_check(families.flat_translation_perturbation(1.0, 10.0))
        eight = fourier_eight()
        crossing = quotient_simplicity_check(eight)
        doubled = quotient_simplicity_check(eight, resolution=4096)
        return {
            "passed": small.simple and large.simple and not crossing.simple and crossing.status == doubled.status,
            "small": small.to_dict(),
            "large": large.to_dict(),
            "figure_eight": crossing.to_dict(),
        }

    _case(suite, "simplicity", simplicity)
    return suite


def fourier_eight() -> ClosedCurve:
    """Figure eight ``(sin 2t, sin t)``."""
    return fourier_curve([[0.0, 0.0], [0.0, 0.0]], [[0.0, 1.0], [1.0, 0.0]], name="figure-eight")


def neck_limit_suite(options: SuiteOptions) -> SuiteResult:
    """First order behaviour of the neck perturbation and its closed form curvature."""
    suite = SuiteResult("neck-limit")
    expected = {"cylinder": 1.0, "cos": 0.0, "cosh": 2.0}

    def constant(kind):
        def check():
            value = necks.neck_limit_constant(necks.neck_profile(kind))
            return {"passed": abs(value - expected[kind]) < 1e-12, "C": value}

        return check

    def taylor(kind):
        def check():
            surface = necks.neck_profile(kind)
            c = necks.neck_limit_constant(surface)
            residual = necks.neck_taylor_residual(surface, 1e-3)
            return {"passed": residual < 1e-2 * abs(c), "residual": residual, "C": c}

        return check

    def closed_form(kind, lam):
        def check():
            surface = necks.neck_profile(kind)
            curve = necks.neck_perturbation(surface, lam)
            theta = curve.grid(256)
            general = revolution_geodesic_curvature(surface, curve, theta)
            exact = neck_closed_form_curvature(surface, lam, theta)
            intrinsic = intrinsic_geodesic_curvature(surface, *curve.derivatives(theta, 2))
            scale = max(float(np.max(np.abs(exact))), 1e-300)
            gap = float(np.max(np.abs(general - exact)) / scale)
            gap_intrinsic = float(np.max(np.abs(intrinsic - general)) / scale)
            return {"passed": gap < 1e-9 and gap_intrinsic < 1e-9, "relative_gap": gap, "intrinsic_gap": gap_intrinsic}

        return check

    for kind in ("cylinder", "cos", "cosh"):
        _case(suite, "C {}".format(kind), constant(kind))
    for kind in ("cylinder", "cosh"):
        _case(suite, "taylor {}".format(kind), taylor(kind))
    for kind in ("cylinder", "cos", "cosh"):
        for lam in AMPLITUDES:
            _case(suite, "closed form {} lambda={}".format(kind, lam), closed_form(kind, lam))
    return suite


def dichotomy_suite(options: SuiteOptions) -> SuiteResult:
    """Neck perturbations have two vertices unless the neck is the equator of a round sphere."""
    suite = SuiteResult("dichotomy")
    L = 2.0 * np.pi
    cases = {"sphere": (2.0 * np.pi / L) ** 2, "cylinder": 0.0, "hyperbolic": -1.0}
    for label, K in cases.items():
        for lam in NECK_AMPLITUDES:
            curve = necks.neck_perturbation(necks.constant_curvature_profile(K, L), lam)
            if label == "sphere":
                test = lambda c: c >= 4  # noqa: E731
            else:
                test = lambda c: c == 2  # noqa: E731
            _case(
                suite,
                "{} K={:.6g} lambda={}".format(label, K, lam),
                lambda curve=curve, test=test: _stable_count(curve, options, test),
            )
    return suite


def jackson_suite(options: SuiteOptions) -> SuiteResult:
    """Small geodesic circles about a point where the curvature gradient is nonzero."""
    suite = SuiteResult("jackson")
    surface = necks.jackson_surface()
    t0 = float(necks.JACKSON_CENTER[1])

    def gradient():
        dk = float(central_derivative(surface.gauss_curvature, np.array([t0]), 1e-4, 1)[0])
        norm = abs(dk) / float(np.sqrt(surface.metric_E(np.array([t0]))[0]))
        return {"passed": norm > 0.1, "dK": norm}

    samples = JACKSON_SAMPLES if options.samples is None else int(options.samples)

    def circle(radius):
        def check():
            # The finer count also doubles the fan, not only the interpolation grid.
            coarse = necks.jackson_circle(radius, n=JACKSON_DIRECTIONS)
            fine = necks.jackson_circle(radius, n=2 * JACKSON_DIRECTIONS)
            report = vertex_report(coarse, n=samples, tol=options.tol)
            doubled = vertex_report(fine, n=2 * samples, tol=options.tol)
            return {
                "passed": report.count == 2 == doubled.count,
                "count": report.count,
                "count_doubled": doubled.count,
            }

        return check

    _case(suite, "curvature gradient", gradient)
    for radius in JACKSON_RADII:
        _case(suite, "radius={}".format(radius), circle(radius))
    return suite


def profiles_suite(options: SuiteOptions) -> SuiteResult:
    """Constant curvature profiles with a prescribed neck length."""
    suite = SuiteResult("profiles")

    def profile(K, L):
        def check():
            surface = necks.constant_curvature_profile(K, L)
            t = np.linspace(surface.interval[0], surface.interval[1], 101)
            error = float(np.max(np.abs(gauss_curvature_revolution(surface, t) - K)))
            neck = 2.0 * np.pi * float(surface.r(np.zeros(1))[0])
            return {
                "passed": error < 1e-6 and abs(neck - L) < 1e-8 and surface.has_neck_at(0.0),
                "curvature_error": error,
                "neck_length": neck,
            }

        return check

    for K in (-1.0, 0.0, 1.0):
        for L in (1.0, 2.0 * np.pi):
            _case(suite, "K={} L={:.6g}".format(K, L), profile(K, L))

    def literal():
        surface = necks.literal_constant_curvature_profile(2.0, 2.0 * np.pi)
        value = float(gauss_curvature_revolution(surface, np.zeros(1))[0])
        return {"passed": abs(value - 0.25) < 1e-9, "curvature": value}

    _case(suite, "literal profile K=2", literal)
    return suite


def moebius_inflections_suite(options: SuiteOptions) -> SuiteResult:
    """Simple antipodally symmetric sphere curves have at least six inflections."""
    suite = SuiteResult("moebius-inflections")
    count = INFLECTION_CURVES if options.n is None else int(options.n)

    def check(seed):
        def run():
            curve = random_antipodal_sphere_curve(seed)
            t = curve.grid(64)
            symmetry = float(
                np.max(np.linalg.norm(antipodal_map(curve.position(t)) - curve.position(t + np.pi), axis=1))
            )
            details = _stable_inflections(curve, options, lambda c: c >= 6)
            details["passed"] = details["passed"] and symmetry < 1e-8
            details["symmetry"] = symmetry
            return details

        return run

    for seed in range(options.seed, options.seed + count):
        _case(suite, "seed={}".format(seed), check(seed))
    return suite


SUITES: Dict[str, Callable[[SuiteOptions], SuiteResult]] = {
    "kneser": kneser_suite,
    "maps": maps_suite,
    "neck-limit": neck_limit_suite,
    "dichotomy": dichotomy_suite,
    "jackson": jackson_suite,
    "families": families_suite,
    "moebius-inflections": moebius_inflections_suite,
    "cylinder": cylinder_suite,
    "profiles": profiles_suite,
}


def suite_names():
    return tuple(SUITES) + ("all",)


def run_suites(name: str, options: SuiteOptions, timing: bool = False):
    """Run the named suite, or every suite for ``all``.

    Raises:
        UnknownSuiteError: ``name`` is not a suite.
    """
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise UnknownSuiteError("Unknown suite {!r}, expected one of: {}".format(name, ", ".join(suite_names())))
    results = []
    for suite_name in names:
        logging.info("Running suite", suite_name)
        start = time.perf_counter()
        result = SUITES[suite_name](options)
        if timing:
            result.elapsed = time.perf_counter() - start
        results.append(result)
    return results
