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

from vertexlab.constructions.registry import FAMILIES, FamilyParams, build_family, family_names
from vertexlab.errors import ParameterError, UnknownFamilyError


def test_params_from_config_read_lambda():
    params = FamilyParams.from_config(Munch({"L": 2.0, "lambda": 0.02, "samples": None, "K": -1.0}))
    assert params.L == 2.0
    assert params.lam == 0.02
    assert params.K == -1.0
    assert params.samples is None
    assert params.to_dict()["lambda"] == 0.02


def test_params_validation():
    with pytest.raises(ParameterError):
        FamilyParams(L=0.0)
    with pytest.raises(ParameterError):
        FamilyParams(lam=-1.0)
    with pytest.raises(ParameterError):
        FamilyParams(h=0.0)
    with pytest.raises(ParameterError):
        FamilyParams(eps=-0.5)


def test_small_regime():
    assert FamilyParams().small
    assert not FamilyParams(L=1.0, lam=0.5).small


def test_registry_lists_every_family():
    assert family_names() == tuple(FAMILIES)
    assert {"flat-translation", "flat-glide", "horocycle", "hyp-translation", "hyp-glide", "cyl2v", "neck"} <= set(
        family_names()
    )


@pytest.mark.parametrize("name", family_names())
def test_every_family_builds_and_closes(name):
    curve = build_family(name, FamilyParams(samples=256))
    assert curve.samples >= 256
    assert curve.closure_residual() < 1e-8


def test_samples_scale_with_deck_power():
    curve = build_family("pair-flat", FamilyParams(samples=300))
    assert curve.deck_power == 2
    assert curve.samples == 600


def test_unknown_family():
    with pytest.raises(UnknownFamilyError):
        build_family("torus")
