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

from typing import Callable, Optional, Tuple

import numpy as np

from vertexlab.curves.curve import ClosedCurve
from vertexlab.errors import DomainError, ParameterError
from vertexlab.geometry.charts import EUCLIDEAN, HALF_PLANE, ConformalChart
from vertexlab.maps.deck import DeckKind, DeckMotion, QuotientModel
from vertexlab.utils import default_samples

CurvePair = Tuple[ClosedCurve, ClosedCurve]
Formula = Callable[[np.ndarray], np.ndarray]


def small_amplitude(L: float) -> float:
    """Default amplitude inside the small regime where the families stay simple."""
    return 0.05 * min(L, 1.0)


def _check(L: float, lam: float, eps: float = 0.0) -> None:
    if not L > 0.0:
        raise ParameterError("L must be positive, got {}".format(L))
    if lam < 0.0:
        raise ParameterError("lambda must be nonnegative, got {}".format(lam))
    if eps < 0.0:
        raise ParameterError("eps must be nonnegative, got {}".format(eps))


def _graph_curve(
    chart: ConformalChart,
    kind: DeckKind,
    L: float,
    lam: float,
    omega: float,
    height: float,
    period: float,
    deck_power: int,
    name: str,
    params: dict,
    shift: float = 0.0,
) -> ClosedCurve:
    r"""Graph :math:`t \mapsto (t, h + \lambda(\sin \omega t + \text{shift}))` with its derivatives."""

    def derivative(order):
        def evaluate(t):
            t = np.atleast_1d(np.asarray(t, dtype=float))
            x = t if order == 0 else np.full_like(t, 1.0 if order == 1 else 0.0)
            y = lam * omega**order * np.sin(omega * t + order * np.pi / 2.0)
            if order == 0:
                y = y + height + lam * shift
            return np.stack([x, y], axis=1)

        return evaluate

    return ClosedCurve(
        period=period,
        evaluator=derivative(0),
        ambient=chart,
        derivative_evaluators=(derivative(1), derivative(2), derivative(3)),
        quotient=QuotientModel(chart, DeckMotion(kind, L)),
        deck_power=deck_power,
        samples=default_samples() * int(round(period / L)),
        name=name,
        params=params,
    )


def _log_curve(
    kind: DeckKind,
    L: float,
    lam: float,
    omega: float,
    period: float,
    deck_power: int,
    name: str,
    params: dict,
    shift: float = 0.0,
) -> ClosedCurve:
    r"""Half-plane curve :math:`(\lambda t (\sin(\omega \ln t) + \text{shift}), t)` in the parameter
    :math:`u = \ln t`, so the multiplicative deck motion becomes :math:`u \mapsto u + L`.
    """
    rate = 1.0 + 1j * omega

    def derivative(order):
        def evaluate(u):
            u = np.atleast_1d(np.asarray(u, dtype=float))
            grow = np.exp(u)
            x = lam * np.imag(rate**order * np.exp(rate * u)) + lam * shift * grow
            return np.stack([x, grow], axis=1)

        return evaluate

    return ClosedCurve(
        period=period,
        evaluator=derivative(0),
        ambient=HALF_PLANE,
        derivative_evaluators=(derivative(1), derivative(2), derivative(3)),
        quotient=QuotientModel(HALF_PLANE, DeckMotion(kind, L)),
        deck_power=deck_power,
        samples=default_samples() * int(round(period / L)),
        name=name,
        params=params,
    )


def flat_translation_perturbation(L: float = 1.0, lam: Optional[float] = None) -> ClosedCurve:
    r"""Sine perturbation :math:`(t, \lambda \sin(2\pi t / L))` of a closed geodesic on the flat
    cylinder :math:`\mathbb{R}^2 / (x \mapsto x + L)`.
    """
    lam = small_amplitude(L) if lam is None else lam
    _check(L, lam)
    return _graph_curve(
        EUCLIDEAN, DeckKind.EUCL_TRANSLATION, L, lam, 2.0 * np.pi / L, 0.0, L, 1,
        "flat-translation", {"L": L, "lambda": lam},
    )


def flat_glide_perturbation(L: float = 1.0, lam: Optional[float] = None) -> ClosedCurve:
    r"""Perturbation :math:`(t, \lambda \sin(\pi t / L))` on the flat Möbius band
    :math:`\mathbb{R}^2 / ((x, y) \mapsto (x + L, -y))`.
    """
    lam = small_amplitude(L) if lam is None else lam
    _check(L, lam)
    return _graph_curve(
        EUCLIDEAN, DeckKind.EUCL_GLIDE, L, lam, np.pi / L, 0.0, L, 1,
        "flat-glide", {"L": L, "lambda": lam},
    )


def horocycle_perturbation(L: float = 1.0, h: float = 1.0, lam: Optional[float] = None) -> ClosedCurve:
    r"""Perturbation :math:`(t, h + \lambda \sin(2\pi t / L))` of the horocycle at height ``h`` in
    the parabolic cusp :math:`\mathbb{H}^2 / (x \mapsto x + L)`.

    Raises:
        DomainError: ``h <= lambda``, the curve would leave the half-plane.
    """
    lam = small_amplitude(L) if lam is None else lam
    _check(L, lam)
    if not h > lam:
        raise DomainError("Horocycle height {} must exceed the amplitude {}".format(h, lam))
    return _graph_curve(
        HALF_PLANE, DeckKind.PARABOLIC, L, lam, 2.0 * np.pi / L, h, L, 1,
        "horocycle", {"L": L, "h": h, "lambda": lam},
    )


def hyperbolic_translation_perturbation(L: float = 1.0, lam: Optional[float] = None) -> ClosedCurve:
    r"""Perturbation :math:`(\lambda t \sin(2\pi \ln t / L), t)` of the imaginary axis on the
    hyperbolic cylinder :math:`\mathbb{H}^2 / (p \mapsto e^L p)`, sampled log-uniformly on
    :math:`[1, e^L)`.
    """
    lam = small_amplitude(L) if lam is None else lam
    _check(L, lam)
    return _log_curve(
        DeckKind.HYP_TRANSLATION, L, lam, 2.0 * np.pi / L, L, 1,
        "hyp-translation", {"L": L, "lambda": lam},
    )


def hyperbolic_glide_perturbation(L: float = 1.0, lam: Optional[float] = None) -> ClosedCurve:
    r"""Perturbation :math:`(\lambda t \sin(\pi \ln t / L), t)` on the hyperbolic Möbius band
    :math:`\mathbb{H}^2 / ((x, y) \mapsto (-e^L x, e^L y))`.
    """
    lam = small_amplitude(L) if lam is None else lam
    _check(L, lam)
    return _log_curve(
        DeckKind.HYP_GLIDE, L, lam, np.pi / L, L, 1,
        "hyp-glide", {"L": L, "lambda": lam},
    )


def hyperbolic_translation_formula(L: float, lam: float) -> Formula:
    r"""The family in its original parameter ``t`` on :math:`[1, e^L]`, for invariance checks
    under :math:`t \mapsto e^L t`.
    """
    return _log_formula(L, lam, 2.0 * np.pi / L)


def hyperbolic_glide_formula(L: float, lam: float) -> Formula:
    return _log_formula(L, lam, np.pi / L)


def _log_formula(L: float, lam: float, omega: float) -> Formula:
    def position(t):
        t = np.atleast_1d(np.asarray(t, dtype=float))
        return np.stack([lam * t * np.sin(omega * np.log(t)), t], axis=1)

    return position


def embedded_pair_flat(L: float = 1.0, lam: Optional[float] = None, eps: float = 0.5) -> CurvePair:
    r"""Lifts :math:`\tilde\gamma_\pm(t) = (t, \lambda(\sin(\pi t / L) \pm \varepsilon))` of one
    closed curve on the flat Möbius band.

    The glide swaps the lifts, :math:`g(\tilde\gamma_+(t)) = \tilde\gamma_-(t + L)`, so each lift
    closes after two periods of the glide and runs once around the projected curve.
    """
    lam = small_amplitude(L) if lam is None else lam
    _check(L, lam, eps)
    params = {"L": L, "lambda": lam, "eps": eps}
    return tuple(
        _graph_curve(
            EUCLIDEAN, DeckKind.EUCL_GLIDE, L, lam, np.pi / L, 0.0, 2.0 * L, 2,
            "pair-flat{}".format(sign_name), dict(params, branch=sign_name), shift=sign * eps,
        )
        for sign, sign_name in ((1.0, "+"), (-1.0, "-"))
    )


def embedded_pair_hyperbolic(L: float = 1.0, lam: Optional[float] = None, eps: float = 0.5) -> CurvePair:
    r"""Lifts :math:`(\lambda t (\sin(\pi \ln t / L) \pm \varepsilon), t)` of one closed curve on
    the hyperbolic Möbius band; the hyperbolic glide swaps them.
    """
    lam = 0.01 if lam is None else lam
    _check(L, lam, eps)
    params = {"L": L, "lambda": lam, "eps": eps}
    return tuple(
        _log_curve(
            DeckKind.HYP_GLIDE, L, lam, np.pi / L, 2.0 * L, 2,
            "pair-hyp{}".format(sign_name), dict(params, branch=sign_name), shift=sign * eps,
        )
        for sign, sign_name in ((1.0, "+"), (-1.0, "-"))
    )


def pair_invariance_residual(pair: CurvePair, motion: Optional[DeckMotion] = None, probes: int = 64) -> float:
    r"""Largest of :math:`\|g(\tilde\gamma_\pm(t)) - \tilde\gamma_\mp(t + L)\|` over a probe grid."""
    plus, minus = pair
    motion = plus.quotient.generator if motion is None else motion
    shift = plus.period / 2.0
    t = plus.grid(probes)
    residuals = [
        np.linalg.norm(motion.apply(first.position(t)) - second.position(t + shift), axis=1)
        for first, second in ((plus, minus), (minus, plus))
    ]
    return float(max(np.max(r) for r in residuals))


def c1_distance(curve: ClosedCurve, base: ClosedCurve, n: int = 1024) -> float:
    r""":math:`\max_t \|\tilde\gamma - \bar\gamma\| + \|\tilde\gamma' - \bar\gamma'\|` over one period."""
    if not np.isclose(curve.period, base.period):
        raise ParameterError("C1 distance needs curves with the same period")
    t = curve.grid(n)
    gap = np.linalg.norm(curve.position(t) - base.position(t), axis=1)
    gap_prime = np.linalg.norm(curve.derivative(t, 1) - base.derivative(t, 1), axis=1)
    return float(np.max(gap + gap_prime))
