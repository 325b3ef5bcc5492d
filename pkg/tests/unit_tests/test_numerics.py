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

from vertexlab.utils import numerics
from vertexlab.utils.numerics import cyclic_distance, refine_root


class TestRefineRoot:
    def test_brent_root(self):
        root = refine_root(np.cos, 1.0, 2.0, 1e-14)
        assert root == pytest.approx(np.pi / 2.0, abs=1e-12)

    def test_zero_endpoint_is_kept(self):
        assert refine_root(lambda x: x, 0.0, 1.0, 1e-12) == 0.0
        assert refine_root(lambda x: x - 1.0, 0.0, 1.0, 1e-12) == 1.0

    def test_no_sign_change_keeps_the_midpoint(self, mocker):
        debug = mocker.spy(numerics.logging, "debug")
        assert refine_root(lambda x: 1.0 + x, 0.0, 1.0, 1e-12) == 0.5
        assert debug.call_args.args[0] == "Root bracket"

    def test_grid_values_the_function_disagrees_with(self, mocker):
        debug = mocker.spy(numerics.logging, "debug")
        assert refine_root(lambda x: 1.0 + x, 0.0, 2.0, 1e-12, fa=-1.0, fb=1.0) == 1.0
        debug.assert_called_once()


def test_cyclic_distance():
    d = cyclic_distance(np.array([0.1, 6.2]), np.array([6.2, 0.1]), 2.0 * np.pi)
    assert d == pytest.approx(np.full(2, 2.0 * np.pi - 6.1))
