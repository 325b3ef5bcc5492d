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

import pytest

import vertexlab
from vertexlab import suites
from vertexlab.reports import RunReport, SuiteResult


def run_cli(*args):
    vertexlab.cli(args=list(args)).run()


def build(capsys, out, *args):
    run_cli("build", *args, "--out", str(out))
    return json.loads(capsys.readouterr().out)


class TestBuild:
    def test_cylinder_curve(self, capsys, tmp_path):
        report = build(capsys, tmp_path, "cyl2v")
        assert report["command"] == "build"
        assert report["vertices"]["count"] == 2
        assert report["args"]["family"] == "cyl2v"
        assert report["files"] == ["cyl2v.csv", "cyl2v.svg", "cyl2v.json"]
        for name in report["files"]:
            assert (tmp_path / name).exists()
        header = (tmp_path / "cyl2v.csv").read_text().splitlines()[0]
        assert header == "t,s,x,y,kappa,kappa_prime"
        assert json.loads((tmp_path / "cyl2v.json").read_text()) == report

    def test_geodesic_is_all_critical(self, capsys, tmp_path):
        report = build(capsys, tmp_path, "flat-translation", "--L", "1", "--lambda", "0", "--samples", "1024")
        assert report["vertices"]["all_critical"] is True
        assert report["vertices"]["count"] == "inf"
        assert report["simplicity"]["simple"] is True

    def test_hyperbolic_neck(self, capsys, tmp_path):
        report = build(capsys, tmp_path, "neck", "--K", "-1", "--L", "6.28", "--lambda", "0.01")
        assert report["vertices"]["count"] == 2
        assert report["residuals"]["closure"] < 1e-10

    def test_glide_family(self, capsys, tmp_path):
        report = build(capsys, tmp_path, "flat-glide", "--lambda", "0.01", "--samples", "2048")
        assert report["vertices"]["count"] == 1
        assert report["curve"]["deck"]["kind"] == "glide"

    def test_reports_are_byte_stable(self, capsys, tmp_path):
        first, second = tmp_path / "first", tmp_path / "second"
        build(capsys, first, "horocycle", "--samples", "1024")
        build(capsys, second, "horocycle", "--samples", "1024")
        for name in ("horocycle.json", "horocycle.csv", "horocycle.svg"):
            assert (first / name).read_bytes() == (second / name).read_bytes()

    def test_unknown_family(self, tmp_path):
        with pytest.raises(SystemExit) as e:
            run_cli("build", "torus", "--out", str(tmp_path))
        assert e.value.code == 2

    def test_bad_parameter_is_a_usage_error(self, capsys, tmp_path):
        with pytest.raises(SystemExit) as e:
            run_cli("build", "cyl2v", "--a", "-1", "--out", str(tmp_path))
        assert e.value.code == 2
        assert capsys.readouterr().out == ""

    def test_nonpositive_samples(self, tmp_path):
        with pytest.raises(SystemExit) as e:
            run_cli("build", "cyl2v", "--samples", "0", "--out", str(tmp_path))
        assert e.value.code == 2


class TestVerify:
    def test_suite_passes(self, capsys, tmp_path):
        run_cli("verify", "cylinder", "--out", str(tmp_path))
        report = json.loads(capsys.readouterr().out)
        assert report["passed"] is True
        assert report["suites"][0]["name"] == "cylinder"
        assert report["files"] == ["verify-cylinder.json"]
        assert json.loads((tmp_path / "verify-cylinder.json").read_text()) == report

    def test_failing_suite_exits_one(self, capsys, monkeypatch):
        def broken(options):
            suite = SuiteResult("cylinder")
            suite.add("always", False, message="forced")
            return suite

        monkeypatch.setitem(suites.SUITES, "cylinder", broken)
        with pytest.raises(SystemExit) as e:
            run_cli("verify", "cylinder")
        assert e.value.code == 1
        report = json.loads(capsys.readouterr().out)
        assert report["passed"] is False

    def test_unknown_suite(self):
        with pytest.raises(SystemExit) as e:
            run_cli("verify", "nope")
        assert e.value.code == 2


class TestExport:
    @pytest.fixture
    def report_path(self, capsys, tmp_path):
        build(capsys, tmp_path, "flat-translation", "--lambda", "0.05", "--samples", "1024")
        return tmp_path / "flat-translation.json"

    def test_json(self, report_path, tmp_path):
        output = tmp_path / "copy.json"
        run_cli("export", str(report_path), "--format", "json", "--output", str(output))
        assert output.read_text() == report_path.read_text()

    def test_csv_matches_build(self, report_path, tmp_path):
        written = report_path.with_suffix(".csv").read_bytes()
        output = tmp_path / "again.csv"
        run_cli("export", str(report_path), "--format", "csv", "--output", str(output))
        lines = output.read_text().splitlines()
        assert lines[0] == "t,s,x,y,kappa,kappa_prime"
        assert output.read_bytes() == written

    def test_csv_of_a_verification_report(self, tmp_path):
        suite = SuiteResult("cylinder")
        suite.add("polar-two-vertices", True)
        suite.add("cyl2v-two-vertices", False, message="count 4")
        path = tmp_path / "verify-cylinder.json"
        path.write_text(RunReport(command="verify", args={"suite": "cylinder"}, suites=[suite]).to_json())
        run_cli("export", str(path), "--format", "csv")
        lines = path.with_suffix(".csv").read_text().splitlines()
        assert lines == [
            "suite,case,status,message",
            "cylinder,polar-two-vertices,pass,",
            "cylinder,cyl2v-two-vertices,fail,count 4",
        ]

    def test_svg_of_a_verification_report(self, tmp_path):
        path = tmp_path / "verify-cylinder.json"
        path.write_text(RunReport(command="verify", args={"suite": "cylinder"}, suites=[SuiteResult("cylinder")]).to_json())
        with pytest.raises(SystemExit) as e:
            run_cli("export", str(path), "--format", "svg")
        assert e.value.code == 1

    def test_svg_matches_build(self, report_path, tmp_path):
        drawn = report_path.with_suffix(".svg").read_bytes()
        output = tmp_path / "again.svg"
        run_cli("export", str(report_path), "--format", "svg", "--output", str(output))
        assert output.read_bytes() == drawn

    def test_missing_report(self, tmp_path):
        with pytest.raises(SystemExit) as e:
            run_cli("export", str(tmp_path / "missing.json"))
        assert e.value.code == 2


def test_families_lists_the_registry(capsys):
    run_cli("families")
    out = capsys.readouterr().out
    assert "cyl2v" in out
    assert "hyp-glide" in out


def test_print_completion(capsys):
    run_cli("--print-completion", "bash")
    assert "families" in capsys.readouterr().out


def test_unknown_command():
    with pytest.raises(SystemExit) as e:
        run_cli("frobnicate")
    assert e.value.code == 2
