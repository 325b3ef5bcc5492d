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

import os

from vertexlab.utils.numerics import (
    TrigonometricSeries,
    central_derivative,
    cyclic_distance,
    periodic_grid,
    refine_root,
)

DEFAULT_SAMPLES = 4096
MIN_SAMPLES = 64


def default_samples() -> int:
    """Grid size per period, overridable through ``VERTEXLAB_SAMPLES``."""
    value = os.getenv("VERTEXLAB_SAMPLES")
    if value is None or value.strip() == "":
        return DEFAULT_SAMPLES
    try:
        samples = int(value)
    except ValueError:
        raise ValueError("VERTEXLAB_SAMPLES must be an integer, got {!r}".format(value))
    return max(samples, MIN_SAMPLES)
