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

from munch import Munch, munchify

defaults: Munch = munchify(
    {
        # None defers to VERTEXLAB_SAMPLES, then 4096.
        "samples": None,
        "tol": 1e-7,
        "seed": 0,
        "n": None,
        "family": {
            "L": 1.0,
            "lambda": None,
            "h": 1.0,
            "eps": 0.5,
            "a": 0.09,
            "K": 0.0,
            "depth": 8.0,
        },
        "simplicity": {"resolution": 2048},
        "out": "./vertexlab-out",
        "export": {"format": "json"},
        "logging": {
            "debug": False,
            "trace": False,
            "record_log": False,
            "logging_dir": "~/.vertexlab/logs",
        },
    }
)

from vertexlab.commands.build import BuildCommand
from vertexlab.commands.verify import VerifyCommand
from vertexlab.commands.export import ExportCommand
from vertexlab.commands.families import FamiliesCommand
