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

import json
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np

from vertexlab.errors import ReportFormatError

REPORT_VERSION = 1


def to_jsonable(value: Any) -> Any:
    """Plain JSON types; numpy scalars and arrays are unwrapped and non-finite floats become strings."""
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return [to_jsonable(v) for v in value.tolist()]
    if isinstance(value, (np.bool_, bool)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (np.floating, float)):
        value = float(value)
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return value
    if hasattr(value, "value") and isinstance(getattr(value, "value"), str):
        return value.value
    return value


def dumps(payload: Dict[str, Any]) -> str:
    """Stable JSON text: sorted keys, two space indent, trailing newline."""
    return json.dumps(to_jsonable(payload), sort_keys=True, indent=2) + "\n"


@dataclass
class CaseResult:
    """One assertion of a suite with the measured values behind it."""

    name: str
    passed: bool
    details: Dict[str, Any] = field(default_factory=dict)
    message: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "passed": bool(self.passed), "details": self.details, "message": self.message}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CaseResult":
        return cls(
            name=data["name"],
            passed=bool(data["passed"]),
            details=dict(data.get("details", {})),
            message=data.get("message", ""),
        )


@dataclass
class SuiteResult:
    name: str
    cases: List[CaseResult] = field(default_factory=list)
    elapsed: Optional[float] = None

    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases)

    @property
    def first_failure(self) -> Optional[CaseResult]:
        return next((case for case in self.cases if not case.passed), None)

    def add(self, name: str, passed: bool, message: str = "", **details) -> CaseResult:
        case = CaseResult(name=name, passed=bool(passed), details=details, message=message)
        self.cases.append(case)
        return case

    def to_dict(self) -> Dict[str, Any]:
        out = {
            "name": self.name,
            "passed": self.passed,
            "cases": [case.to_dict() for case in self.cases],
        }
        if self.elapsed is not None:
            out["elapsed"] = self.elapsed
        return out

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SuiteResult":
        return cls(
            name=data["name"],
            cases=[CaseResult.from_dict(c) for c in data.get("cases", [])],
            elapsed=data.get("elapsed"),
        )


@dataclass
class RunReport:
    r"""Everything one command run produced, serialized as stable JSON.

    Args:
        command (str): command name, ``build`` or ``verify``.
        args (dict): echo of the relevant configuration.
        curve (dict, optional): description of the built curve.
        vertices (dict, optional): vertex report.
        inflections (dict, optional): inflection report.
        residuals (dict): invariance and closure residuals.
        suites (list): suite results of a verification run.
        files (list): files written, relative to ``--out``.
        elapsed (float, optional): wall time, only recorded with ``--timing``.
    """

    command: str
    args: Dict[str, Any] = field(default_factory=dict)
    curve: Optional[Dict[str, Any]] = None
    vertices: Optional[Dict[str, Any]] = None
    inflections: Optional[Dict[str, Any]] = None
    residuals: Dict[str, Any] = field(default_factory=dict)
    simplicity: Optional[Dict[str, Any]] = None
    suites: List[SuiteResult] = field(default_factory=list)
    files: List[str] = field(default_factory=list)
    elapsed: Optional[float] = None

    @property
    def passed(self) -> bool:
        return all(suite.passed for suite in self.suites)

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "version": REPORT_VERSION,
            "command": self.command,
            "args": self.args,
            "residuals": self.residuals,
            "files": list(self.files),
        }
        for key in ("curve", "vertices", "inflections", "simplicity"):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        if self.suites:
            out["suites"] = [suite.to_dict() for suite in self.suites]
            out["passed"] = self.passed
        if self.elapsed is not None:
            out["elapsed"] = self.elapsed
        return to_jsonable(out)

    def to_json(self) -> str:
        return dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RunReport":
        """Rebuild a report from its JSON form.

        Raises:
            ReportFormatError: ``data`` is not a report.
        """
        if not isinstance(data, dict) or "command" not in data:
            raise ReportFormatError("Not a vertexlab report: missing 'command'")
        if data.get("version", REPORT_VERSION) != REPORT_VERSION:
            raise ReportFormatError("Unsupported report version {}".format(data.get("version")))
        return cls(
            command=data["command"],
            args=dict(data.get("args", {})),
            curve=data.get("curve"),
            vertices=data.get("vertices"),
            inflections=data.get("inflections"),
            residuals=dict(data.get("residuals", {})),
            simplicity=data.get("simplicity"),
            suites=[SuiteResult.from_dict(s) for s in data.get("suites", [])],
            files=list(data.get("files", [])),
            elapsed=data.get("elapsed"),
        )

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ReportFormatError("Report is not valid JSON: {}".format(e)) from e
        return cls.from_dict(data)
