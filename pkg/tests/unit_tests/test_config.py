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

import argparse

import pytest

from vertexlab.config import Config, InvalidConfigFile
from vertexlab.vllogging import logging


def make_parser():
    parser = argparse.ArgumentParser()
    parser.add_argument("--L", type=float, default=1.0)
    parser.add_argument("--samples", type=int, default=None)
    logging.add_args(parser)
    return parser


def test_defaults_and_explicit_values():
    config = Config(make_parser(), args=["--L", "2.5"])
    assert config.L == 2.5
    assert config.samples is None
    assert config.is_set("L")
    assert not config.is_set("samples")
    assert config.logging.logging_dir == "~/.vertexlab/logs"


def test_yaml_file_overrides_defaults(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text("samples: 128\nlogging:\n  debug: true\n")
    config = Config(make_parser(), args=["--config", str(path)])
    assert config.samples == 128
    assert config.logging.debug is True
    assert config.L == 1.0


def test_command_line_beats_yaml(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text("L: 3.0\n")
    config = Config(make_parser(), args=["--config", str(path), "--L", "4"])
    assert config.L == 4.0


def test_broken_yaml(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text("L: [unclosed\n")
    with pytest.raises(InvalidConfigFile):
        Config(make_parser(), args=["--config", str(path)])


def test_strict_rejects_unknown_arguments():
    with pytest.raises(SystemExit):
        Config(make_parser(), args=["--bogus", "1"], strict=True)
    assert Config(make_parser(), args=["--bogus", "1"]).L == 1.0


def test_merge_and_copy():
    a = Config(make_parser(), args=[])
    b = Config()
    b["logging"] = {"debug": True}
    a.merge(b)
    assert a.logging["debug"] is True
    copied = a.copy()
    copied.L = 9.0
    assert a.L == 1.0
    assert "__is_set" not in a.to_dict()
    assert "logging:" in str(a)


def test_logging_config_defaults():
    config = logging.config()
    assert config.logging.debug is False
    assert config.logging.trace is False
    assert config.logging.level is None


def test_logging_levels():
    logging(debug=True)
    assert logging.get_level() == 10
    logging(trace=True)
    assert logging.get_level() == 5
    logging(debug=False, trace=False)
    assert logging.get_level() == 20


def test_log_message_format():
    import numpy as np

    text = logging._format("Vertices", np.array([0.0, 1.5]))
    assert text.startswith("Vertices".ljust(30))
    assert "shape: (2,)" in text
    assert logging._format("<red>plain</red>").strip() == "plain"
