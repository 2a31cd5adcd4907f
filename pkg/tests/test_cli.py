"""CLI tests: golden rows, report shapes, SVG structure, determinism, exit codes."""

import json
import math
import subprocess
import sys
from xml.etree import ElementTree as ET

import pytest

from trisectrix.curve import trace_point

SVG_NS = "{http://www.w3.org/2000/svg}"


def run_cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "trisectrix", *args],
        capture_output=True,
        text=True,
    )
    return proc.returncode, proc.stdout, proc.stderr


class TestCurveCommand:
    def test_csv_golden_rows(self):
        code, out, _ = run_cli("curve", "--t-min-deg", "10", "--t-max-deg", "90", "--samples", "3")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "t_deg,x,y"
        assert lines[1] == "10.000000,4.987242,2.879385"
        assert lines[2] == "50.000000,-1.130516,0.652704"
        assert lines[3] == "90.000000,0.000000,-1.000000"
        assert len(lines) == 4
        assert not out.endswith(",")

    def test_csv_round_trip_to_emitted_precision(self):
        code, out, _ = run_cli(
            "curve", "--t-min-deg", "5", "--t-max-deg", "85", "--samples", "17", "--precision", "9"
        )
        assert code == 0
        for line in out.splitlines()[1:]:
            t_deg, x, y = (float(v) for v in line.split(","))
            p = trace_point(math.radians(t_deg))
            assert abs(x - p.x) <= 0.5e-9 + 1e-12
            assert abs(y - p.y) <= 0.5e-9 + 1e-12

    def test_degenerate_range_is_usage_error(self):
        code, _, err = run_cli("curve", "--t-min-deg", "30", "--t-max-deg", "30", "--samples", "2")
        assert code == 2
        assert "error" in err

    def test_svg_structure(self):
        code, out, _ = run_cli("curve", "--format", "svg", "--samples", "200")
        assert code == 0
        root = ET.fromstring(out)  # well-formed XML or this raises
        polylines = root.findall(f"{SVG_NS}polyline")
        assert len(polylines) == 1
        assert polylines[0].get("class") == "trace"
        assert len(root.findall(f"{SVG_NS}circle")) == 0
        dashed = [el for el in root.iter(f"{SVG_NS}line") if el.get("stroke-dasharray")]
        assert len(dashed) == 1  # the asymptote


class TestTrisectCommand:
    def test_report_fields_and_values(self):
        code, out, _ = run_cli("trisect", "--angle-deg", "90")
        assert code == 0
        report = json.loads(out)
        assert list(report) == [
            "angle_deg",
            "method",
            "ray1_deg",
            "ray2_deg",
            "error_rad",
            "points",
            "tolerance",
            "pass",
        ]
        assert report["method"] == "curve"
        assert report["ray1_deg"] == 30.0
        assert report["ray2_deg"] == 60.0
        assert report["pass"] is True
        assert set(report["points"]) == {"c", "d", "e"}
        assert report["points"]["c"][0] == pytest.approx(math.sqrt(3.0), abs=1e-9)

    def test_tangency_report(self):
        code, out, _ = run_cli("trisect", "--angle-deg", "270")
        assert code == 0
        report = json.loads(out)
        assert report["ray1_deg"] == 90.0
        assert report["ray2_deg"] == 180.0
        assert report["pass"] is True

    def test_scudder_report(self):
        code, out, _ = run_cli("trisect", "--angle-deg", "120", "--method", "scudder")
        assert code == 0
        report = json.loads(out)
        assert report["method"] == "scudder"
        assert report["ray1_deg"] == pytest.approx(40.0, abs=1e-7)

    def test_out_of_range_is_usage_error(self):
        code, _, err = run_cli("trisect", "--angle-deg", "271")
        assert code == 2
        assert "error" in err

    def test_impossible_tolerance_is_verification_failure(self):
        code, out, _ = run_cli("trisect", "--angle-deg", "90", "--tol", "1e-18")
        assert code == 1
        assert json.loads(out)["pass"] is False

    def test_svg_structure_curve_method(self):
        code, out, _ = run_cli("trisect", "--angle-deg", "90", "--format", "svg")
        assert code == 0
        root = ET.fromstring(out)
        assert len(root.findall(f"{SVG_NS}polyline")) == 1
        assert len(root.findall(f"{SVG_NS}circle")) == 1
        trisectors = [el for el in root.iter(f"{SVG_NS}line") if el.get("class") == "trisector"]
        assert len(trisectors) == 2
        labels = {el.text for el in root.iter(f"{SVG_NS}text")}
        assert {"O", "A", "B", "C", "D", "E"} <= labels

    def test_svg_structure_scudder_method(self):
        code, out, _ = run_cli("trisect", "--angle-deg", "90", "--format", "svg", "--method", "scudder")
        assert code == 0
        root = ET.fromstring(out)
        assert len(root.findall(f"{SVG_NS}circle")) == 0
        assert len(root.findall(f"{SVG_NS}polyline")) == 1


class TestSimulateCommand:
    def test_golden_rows(self):
        code, out, _ = run_cli("simulate", "--u-min-deg", "60", "--u-max-deg", "90", "--steps", "2")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "u_deg,s,Cx,Cy,Dx,Dy,Ex,Ey"
        assert lines[1] == "60.000000,1.732051,1.732051,1.000000,0.000000,2.000000,0.866025,1.500000"
        assert lines[2] == "90.000000,1.000000,1.000000,1.000000,-1.000000,1.000000,0.000000,1.000000"

    def test_guide_pencil_stays_on_the_line(self):
        code, out, _ = run_cli(
            "simulate", "--u-min-deg", "1", "--u-max-deg", "179", "--steps", "1000",
            "--precision", "14",
        )
        assert code == 0
        for line in out.splitlines()[1:]:
            cy = float(line.split(",")[3])
            assert abs(cy - 1.0) <= 1e-12

    def test_bad_range_is_usage_error(self):
        code, _, _ = run_cli("simulate", "--u-min-deg", "60", "--u-max-deg", "60", "--steps", "2")
        assert code == 2


class TestSweepCommand:
    def test_single_method_report(self):
        code, out, _ = run_cli(
            "sweep", "--from-deg", "1", "--to-deg", "30", "--step-deg", "1", "--method", "curve"
        )
        assert code == 0
        report = json.loads(out)
        assert report["method"] == "curve"
        assert report["count"] == 30
        assert report["max_error_rad"] <= 1e-9
        assert report["failures"] == []

    def test_both_methods_in_one_report(self):
        code, out, _ = run_cli(
            "sweep", "--from-deg", "10", "--to-deg", "12", "--step-deg", "1", "--method", "both"
        )
        assert code == 0
        report = json.loads(out)
        assert set(report) == {"curve", "scudder"}
        assert report["scudder"]["max_error_rad"] <= 1e-7

    def test_bad_range_is_usage_error(self):
        code, _, _ = run_cli("sweep", "--from-deg", "0", "--to-deg", "30", "--step-deg", "1")
        assert code == 2


class TestDeterminism:
    @pytest.mark.parametrize(
        "args",
        [
            ("curve", "--t-min-deg", "1", "--t-max-deg", "89", "--samples", "50"),
            ("curve", "--format", "svg", "--samples", "64"),
            ("trisect", "--angle-deg", "137.5"),
            ("trisect", "--angle-deg", "137.5", "--format", "svg"),
            ("simulate", "--u-min-deg", "10", "--u-max-deg", "170", "--steps", "40"),
            ("sweep", "--from-deg", "5", "--to-deg", "15", "--step-deg", "5"),
        ],
    )
    def test_repeated_runs_are_byte_identical(self, args):
        first = run_cli(*args)
        second = run_cli(*args)
        assert first == second
        assert first[1]  # produced something

    def test_file_output_matches_stdout(self, tmp_path):
        out_file = tmp_path / "curve.csv"
        code, stdout, _ = run_cli("curve", "--samples", "20")
        assert code == 0
        code2, _, _ = run_cli("curve", "--samples", "20", "--out", str(out_file))
        assert code2 == 0
        assert out_file.read_text() == stdout
