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
import copy
import os
import re
import sys
from typing import Any, Dict, Optional

import numpy as np
from loguru import logger

from vertexlab.config import Config


logger = logger.opt(colors=True)
try:
    logger.remove(0)
except ValueError:
    pass

_MARKUP = re.compile(r"<.*?>")

# Numeric thresholds of the facade; loguru's own TRACE/DEBUG/INFO numbers.
LEVEL_TRACE = 5
LEVEL_DEBUG = 10
LEVEL_INFO = 20

LOG_FILE = "vertexlab.log"

_ENV_DEFAULTS: Dict[str, Any] = {
    "debug": False,
    "trace": False,
    "record_log": False,
    "logging_dir": "~/.vertexlab/logs",
}


def _env_default(key: str) -> Any:
    return os.getenv("VERTEXLAB_LOGGING_" + key.upper()) or _ENV_DEFAULTS[key]


def _describe(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, np.ndarray):
        data = np.array2string(value, precision=6, threshold=8)
        return "shape: {} data: {}".format(value.shape, data)
    return str(value)


class logging:
    """Standardized logging for vertexlab.

    Everything goes to stderr; stdout carries JSON reports only. Messages are a
    left-aligned prefix followed by an optional value, with numpy arrays summarised.
    """

    __has_been_inited__: bool = False
    __debug_on__: bool = False
    __trace_on__: bool = False
    __std_sink__: Optional[int] = None
    __file_sink__: Optional[int] = None
    __off__: bool = False

    def __new__(
        cls,
        config: Optional["Config"] = None,
        level: Optional[int] = None,
        debug: Optional[bool] = None,
        trace: Optional[bool] = None,
        record_log: Optional[bool] = None,
        logging_dir: Optional[str] = None,
    ):
        r"""(Re)configure the sinks.

        Args:
            config (Config, optional):
                vertexlab.logging.config(); the ``logging`` section is read.
            level (int, optional):
                Threshold of the stderr sink.
            debug, trace (bool, optional):
                Lower the facade filter to debug or trace.
            record_log (bool, optional):
                Also write ``vertexlab.log`` under ``logging_dir``.
            logging_dir (str, optional):
                Directory of the rotating log file.
        """
        cls.__has_been_inited__ = True

        section = copy.deepcopy((config if config is not None else cls.config()).logging)
        overrides = {
            "level": level,
            "debug": debug,
            "trace": trace,
            "record_log": record_log,
            "logging_dir": logging_dir,
        }
        for key, value in overrides.items():
            if value is not None:
                section[key] = value
        if section.get("level") is None:
            section.level = LEVEL_INFO

        cls._drop_sinks()
        if not cls.__off__:
            cls.__std_sink__ = cls._stderr_sink(section.level)
        cls.__debug_on__ = bool(section.debug)
        cls.__trace_on__ = bool(section.trace)

        if section.record_log:
            path = os.path.join(os.path.expanduser(section.logging_dir), LOG_FILE)
            cls.__file_sink__ = logger.add(
                path,
                filter=cls.log_save_filter,
                backtrace=True,
                diagnose=False,
                format=cls.log_save_formatter,
                rotation="25 MB",
                retention="10 days",
            )

    @classmethod
    def _drop_sinks(cls):
        for sink in (cls.__std_sink__, cls.__file_sink__):
            if sink is not None:
                logger.remove(sink)
        cls.__std_sink__ = None
        cls.__file_sink__ = None

    @classmethod
    def _stderr_sink(cls, level: int) -> int:
        return logger.add(
            sys.stderr,
            level=level,
            filter=cls.log_filter,
            colorize=True,
            backtrace=True,
            diagnose=False,
            format=cls.log_formatter,
        )

    @classmethod
    def _ensure(cls):
        if not cls.__has_been_inited__:
            cls()

    @classmethod
    def off(cls):
        """Silence stderr; the file sink, if any, keeps recording."""
        cls._ensure()
        cls.__off__ = True
        if cls.__std_sink__ is not None:
            logger.remove(cls.__std_sink__)
            cls.__std_sink__ = None

    @classmethod
    def on(cls):
        if cls.__off__:
            cls.__off__ = False
            cls.__std_sink__ = cls._stderr_sink(0)

    @classmethod
    def config(cls) -> "Config":
        """Logging-only config with environment defaults applied."""
        parser = argparse.ArgumentParser()
        cls.add_args(parser)
        return Config(parser, args=[])

    @classmethod
    def add_args(cls, parser: argparse.ArgumentParser, prefix: Optional[str] = None):
        """Add the ``--logging.*`` flags, optionally under ``prefix``."""
        flag = "--{}logging.".format("" if prefix is None else prefix + ".")
        switches = {
            "debug": "Turn on debug output.",
            "trace": "Turn on trace output, including source locations in the log file.",
            "record_log": "Also write logs to a rotating file.",
        }
        try:
            for key, text in switches.items():
                parser.add_argument(
                    flag + key, action="store_true", help=text, default=_env_default(key)
                )
            parser.add_argument(
                flag + "level",
                type=int,
                default=None,
                help="Numeric threshold of the stderr sink (default {}).".format(LEVEL_INFO),
            )
            parser.add_argument(
                flag + "logging_dir",
                type=str,
                default=_env_default("logging_dir"),
                help="Directory of the log file.",
            )
        except argparse.ArgumentError:
            # Flags already registered on this parser.
            pass

    @classmethod
    def check_config(cls, config: "Config"):
        assert config.logging

    @classmethod
    def set_debug(cls, debug_on: bool = True):
        cls._ensure()
        cls.__debug_on__ = debug_on

    @classmethod
    def set_trace(cls, trace_on: bool = True):
        cls._ensure()
        cls.__trace_on__ = trace_on

    @classmethod
    def get_level(cls) -> int:
        if cls.__trace_on__:
            return LEVEL_TRACE
        return LEVEL_DEBUG if cls.__debug_on__ else LEVEL_INFO

    @classmethod
    def log_filter(cls, record) -> bool:
        return record["level"].no >= cls.get_level()

    @classmethod
    def log_save_filter(cls, record) -> bool:
        return record["level"].no > cls.get_level()

    @classmethod
    def log_formatter(cls, record) -> str:
        return "<blue>{time:HH:mm:ss.SSS}</blue> | <level>{level: ^9}</level> | {message}\n"

    @classmethod
    def log_save_formatter(cls, record) -> str:
        where = " | {name}:{function}:{line}" if cls.__trace_on__ else ""
        return "{time:YYYY-MM-DD HH:mm:ss.SSS} | {level: ^9}" + where + " | {message}\n"

    @classmethod
    def _format(cls, prefix: object, sufix: object = None) -> str:
        return _MARKUP.sub("", str(prefix).ljust(30) + _describe(sufix))

    @classmethod
    def _emit(cls, method: str, prefix: object, sufix: object):
        cls._ensure()
        getattr(logger, method)(cls._format(prefix, sufix))

    @classmethod
    def success(cls, prefix: object, sufix: object = None):
        cls._emit("success", prefix, sufix)

    @classmethod
    def warning(cls, prefix: object, sufix: object = None):
        cls._emit("warning", prefix, sufix)

    @classmethod
    def error(cls, prefix: object, sufix: object = None):
        cls._emit("error", prefix, sufix)

    @classmethod
    def info(cls, prefix: object, sufix: object = None):
        cls._emit("info", prefix, sufix)

    @classmethod
    def debug(cls, prefix: object, sufix: object = None):
        cls._emit("debug", prefix, sufix)

    @classmethod
    def trace(cls, prefix: object, sufix: object = None):
        cls._emit("trace", prefix, sufix)

    @classmethod
    def exception(cls, prefix: object, sufix: object = None):
        """Error with the active traceback attached."""
        cls._emit("exception", prefix, sufix)
