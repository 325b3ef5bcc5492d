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
from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional, Tuple

from vertexlab.constructions import cylinder, families, necks
from vertexlab.curves.curve import ClosedCurve
from vertexlab.errors import ParameterError, UnknownFamilyError


@dataclass(frozen=True)
class FamilyParams:
    r"""Shared parameters of the curve families.

    Args:
        L (float): period, deck length or neck length.
        lam (float, optional): amplitude; ``None`` picks the small-regime default.
        h (float): horocycle height.
        eps (float): offset of the embedded pairs.
        a (float): shape constant of the two vertex cylinder curve.
        K (float): target curvature of the neck surface.
        depth (float): depth of the cusp transplant.
        samples (int, optional): grid size per period.
    """

    L: float = 1.0
    lam: Optional[float] = None
    h: float = 1.0
    eps: float = 0.5
    a: float = cylinder.DEFAULT_A
    K: float = 0.0
    depth: float = 8.0
    samples: Optional[int] = None

    def __post_init__(self):
        if not self.L > 0.0:
            raise ParameterError("L must be positive, got {}".format(self.L))
        if self.lam is not None and self.lam < 0.0:
            raise ParameterError("lambda must be nonnegative, got {}".format(self.lam))
        if not self.h > 0.0:
            raise ParameterError("h must be positive, got {}".format(self.h))
        if self.eps < 0.0:
            raise ParameterError("eps must be nonnegative, got {}".format(self.eps))

    @property
    def small(self) -> bool:
        """Whether the amplitude is in the small regime ``lambda < 0.1 L``."""
        lam = families.small_amplitude(self.L) if self.lam is None else self.lam
        return lam < 0.1 * self.L

    @classmethod
    def from_config(cls, config: Any) -> "FamilyParams":
        """Read ``L``, ``lambda``, ``h``, ``eps``, ``a``, ``K``, ``depth`` and ``samples`` from a config."""
        fields = {"L": "L", "lam": "lambda", "h": "h", "eps": "eps", "a": "a", "K": "K", "depth": "depth", "samples": "samples"}
        values = {}
        for attr, key in fields.items():
            value = config.get(key) if hasattr(config, "get") else getattr(config, key, None)
            if value is not None:
                values[attr] = value
        return cls(**values)

    def to_dict(self) -> Dict[str, Any]:
        out = dataclasses.asdict(self)
        out["lambda"] = out.pop("lam")
        return out


@dataclass(frozen=True)
class Family:
    name: str
    builder: Callable[[FamilyParams], ClosedCurve]
    ambient: str
    deck: str
    params: Tuple[str, ...]
    summary: str


def _sampled(curve: ClosedCurve, params: FamilyParams) -> ClosedCurve:
    if params.samples is None:
        return curve
    return curve.with_samples(int(params.samples) * max(1, curve.deck_power))


def _neck(p: FamilyParams) -> ClosedCurve:
    lam = 0.01 if p.lam is None else p.lam
    return necks.neck_perturbation(necks.constant_curvature_profile(p.K, p.L), lam)


FAMILIES: Dict[str, Family] = {
    family.name: family
    for family in (
        Family(
            "flat-translation",
            lambda p: families.flat_translation_perturbation(p.L, p.lam),
            "euclidean", "translation", ("L", "lambda"),
            "(t, lambda sin(2 pi t / L)) on the flat cylinder",
        ),
        Family(
            "flat-glide",
            lambda p: families.flat_glide_perturbation(p.L, p.lam),
            "euclidean", "glide", ("L", "lambda"),
            "(t, lambda sin(pi t / L)) on the flat Moebius band",
        ),
        Family(
            "horocycle",
            lambda p: families.horocycle_perturbation(p.L, p.h, p.lam),
            "half-plane", "parabolic", ("L", "h", "lambda"),
            "(t, h + lambda sin(2 pi t / L)) in a cusp",
        ),
        Family(
            "hyp-translation",
            lambda p: families.hyperbolic_translation_perturbation(p.L, p.lam),
            "half-plane", "hyperbolic-translation", ("L", "lambda"),
            "(lambda t sin(2 pi ln t / L), t) on the hyperbolic cylinder",
        ),
        Family(
            "hyp-glide",
            lambda p: families.hyperbolic_glide_perturbation(p.L, p.lam),
            "half-plane", "hyperbolic-glide", ("L", "lambda"),
            "(lambda t sin(pi ln t / L), t) on the hyperbolic Moebius band",
        ),
        Family(
            "cyl2v",
            lambda p: cylinder.two_vertex_cylinder_curve(p.a, samples=p.samples),
            "euclidean", "translation", ("a",),
            "two vertex curve on a flat cylinder, inverse of r = cos(theta/5)",
        ),
        Family(
            "pair-flat",
            lambda p: families.embedded_pair_flat(p.L, p.lam, p.eps)[0],
            "euclidean", "glide", ("L", "lambda", "eps"),
            "embedded glide pair (t, lambda (sin(pi t / L) +- eps)), + lift",
        ),
        Family(
            "pair-hyp",
            lambda p: families.embedded_pair_hyperbolic(p.L, p.lam, p.eps)[0],
            "half-plane", "hyperbolic-glide", ("L", "lambda", "eps"),
            "embedded hyperbolic glide pair, + lift",
        ),
        Family(
            "neck",
            _neck,
            "revolution", "rotation", ("K", "L", "lambda"),
            "X(lambda cos theta, theta) near the neck of a constant curvature surface",
        ),
        Family(
            "polar-cos5",
            lambda p: cylinder.polar_cos5_curve(p.samples),
            "euclidean", "-", (),
            "polar curve r = cos(theta / 5) over [0, 5 pi)",
        ),
        Family(
            "hyp-cyl2v",
            lambda p: cylinder.rescaled_hyperbolic_copies(p.a, p.L, copies=1)[0],
            "half-plane", "-", ("a", "L"),
            "two vertex cylinder curve read in the hyperbolic half-plane",
        ),
        Family(
            "cusp-cyl2v",
            lambda p: cylinder.cusp_transplant(p.a, p.depth),
            "revolution", "rotation", ("a", "depth"),
            "two vertex cylinder curve wrapped onto a deep cusp",
        ),
    )
}


def family_names() -> Tuple[str, ...]:
    return tuple(FAMILIES)


def build_family(name: str, params: Optional[FamilyParams] = None) -> ClosedCurve:
    """Build the registered family ``name``.

    Raises:
        UnknownFamilyError: ``name`` is not registered.
    """
    if name not in FAMILIES:
        raise UnknownFamilyError(
            "Unknown family {!r}, expected one of: {}".format(name, ", ".join(FAMILIES))
        )
    params = FamilyParams() if params is None else params
    return _sampled(FAMILIES[name].builder(params), params)
