"""Command-line front end: curve sampling, trisection reports, compass
simulation, and full-range verification sweeps.

Angles are degrees at this boundary and radians everywhere below it.
CSV uses fixed-point columns at --precision decimals; JSON numbers carry
12 significant digits.  Identical invocations produce byte-identical
output (no timestamps, fixed ordering, atomic file writes).

Exit status: 0 on success/pass, 1 on verification failure, 2 on usage
or I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile
from pathlib import Path

from . import construct, curve, linkage
from .errors import BadRange, OutOfRange, TrisectrixError
from .geom import ORIGIN, Point, Ray
from .svg import (
    COLOR_ASYMPTOTE,
    COLOR_AXIS,
    COLOR_BASE_RAY,
    COLOR_CIRCLE,
    COLOR_GUIDE,
    COLOR_TRACE,
    COLOR_TRISECTOR,
    RenderSpec,
    Scene,
    STROKE_BOLD,
    STROKE_THIN,
)

# Long enough to cross the default window from the origin at any angle.
_RAY_REACH = 12.0
_TRISECT_TRACE_SAMPLES = 600


# --- formatting ------------------------------------------------------------


def _fmt_fixed(x: float, precision: int) -> str:
    r = round(x, precision)
    if r == 0.0:
        r = 0.0  # normalize -0
    return f"{r:.{precision}f}"


def _sig(x: float) -> float:
    return float(f"{x:.12g}")


def _jsonify(value):
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        return _sig(value)
    if isinstance(value, dict):
        return {k: _jsonify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonify(v) for v in value]
    raise TypeError(f"cannot serialize {type(value)!r}")


def _to_json(payload: dict) -> str:
    return json.dumps(_jsonify(payload), indent=2) + "\n"


def _point_pair(p: Point) -> list[float]:
    return [p.x, p.y]


def _degree_grid(lo: float, hi: float, n: int) -> list[float]:
    step = (hi - lo) / (n - 1)
    return [lo + i * step for i in range(n - 1)] + [hi]


# --- content builders ------------------------------------------------------


def curve_csv(t_min_deg: float, t_max_deg: float, samples: int, precision: int) -> str:
    lines = ["t_deg,x,y"]
    for t_deg in _degree_grid(t_min_deg, t_max_deg, samples):
        p = curve.trace_point(math.radians(t_deg))
        lines.append(
            f"{_fmt_fixed(t_deg, precision)},{_fmt_fixed(p.x, precision)},{_fmt_fixed(p.y, precision)}"
        )
    return "\n".join(lines) + "\n"


def simulate_csv(u_min_deg: float, u_max_deg: float, steps: int, precision: int) -> str:
    lines = ["u_deg,s,Cx,Cy,Dx,Dy,Ex,Ey"]
    for u_deg in _degree_grid(u_min_deg, u_max_deg, steps):
        st = linkage.state_from_leg_angle(math.radians(u_deg))
        cells = (u_deg, st.s, st.C.x, st.C.y, st.D.x, st.D.y, st.E.x, st.E.y)
        lines.append(",".join(_fmt_fixed(v, precision) for v in cells))
    return "\n".join(lines) + "\n"


def trisect_report(res: construct.TrisectionResult, tol: float) -> tuple[dict, bool]:
    cert = construct.verify_trisection(res, tol)
    # worst residual over the whole certificate keeps `pass` exactly
    # equivalent to `error_rad <= tolerance`
    error_rad = cert.worst()[1]
    payload = {
        "angle_deg": math.degrees(res.phi),
        "method": res.method,
        "ray1_deg": math.degrees(res.ray1.angle),
        "ray2_deg": math.degrees(res.ray2.angle),
        "error_rad": error_rad,
        "points": {
            "c": _point_pair(res.C),
            "d": _point_pair(res.D),
            "e": _point_pair(res.midpoint_e()),
        },
        "tolerance": tol,
        "pass": cert.passed,
    }
    return payload, cert.passed


def sweep_report_dict(report: construct.SweepReport) -> dict:
    return {
        "phi_min_deg": report.phi_min_deg,
        "phi_max_deg": report.phi_max_deg,
        "step_deg": report.step_deg,
        "method": report.method,
        "count": report.count,
        "max_error_rad": report.max_error_rad,
        "mean_error_rad": report.mean_error_rad,
        "argmax_phi_deg": report.argmax_phi_deg,
        "failures": list(report.failures),
    }


def _paint_axes(scene: Scene) -> None:
    spec = scene.spec
    scene.line(Point(spec.x_min, 0.0), Point(spec.x_max, 0.0), COLOR_AXIS, STROKE_THIN, cls="axis")
    scene.line(Point(0.0, spec.y_min), Point(0.0, spec.y_max), COLOR_AXIS, STROKE_THIN, cls="axis")


def _trace_points(t_min: float, t_max: float, samples: int) -> list[Point]:
    return [p for _, p in curve.sample_trace(t_min, t_max, samples)]


def curve_svg(t_min_deg: float, t_max_deg: float, samples: int, precision: int) -> str:
    spec = RenderSpec(precision=precision)
    scene = Scene(spec)
    _paint_axes(scene)
    scene.line(
        Point(spec.x_min, 3.0), Point(spec.x_max, 3.0), COLOR_ASYMPTOTE, STROKE_THIN, dashed=True, cls="asymptote"
    )
    scene.polyline(
        _trace_points(math.radians(t_min_deg), math.radians(t_max_deg), samples),
        COLOR_TRACE,
        STROKE_BOLD,
        cls="trace",
    )
    scene.marker(Point(0.0, 2.0), cls="node")
    scene.text(Point(0.0, 2.0), "(0,2)")
    return scene.to_svg()


def trisect_svg(res: construct.TrisectionResult, precision: int) -> str:
    spec = RenderSpec(precision=precision)
    scene = Scene(spec)
    _paint_axes(scene)
    scene.line(Point(spec.x_min, 1.0), Point(spec.x_max, 1.0), COLOR_GUIDE, STROKE_THIN, cls="guide")
    scene.polyline(
        _trace_points(curve.DEFAULT_SAMPLE_T_MIN, curve.T_MAX, _TRISECT_TRACE_SAMPLES),
        COLOR_TRACE,
        STROKE_THIN,
        cls="trace",
    )
    base = Ray(ORIGIN, 0.0)
    target = Ray(ORIGIN, res.phi)
    scene.line(ORIGIN, base.point_at(_RAY_REACH), COLOR_BASE_RAY, cls="base-ray")
    scene.line(ORIGIN, target.point_at(_RAY_REACH), COLOR_BASE_RAY, cls="base-ray")
    if res.method == construct.METHOD_CURVE:
        scene.circle(res.D, construct.TOP_LENGTH, COLOR_CIRCLE, cls="construction-circle")
    scene.line(ORIGIN, res.ray1.point_at(_RAY_REACH), COLOR_TRISECTOR, cls="trisector")
    scene.line(ORIGIN, res.ray2.point_at(_RAY_REACH), COLOR_TRISECTOR, cls="trisector")
    e = res.midpoint_e()
    for point, label in ((res.C, "C"), (res.D, "D"), (e, "E")):
        scene.marker(point, cls="witness")
        scene.text(point, label)
    scene.text(ORIGIN, "O", dx_px=-16.0, dy_px=16.0)
    scene.text(base.point_at(spec.x_max - 0.8), "A")
    scene.text(target.point_at(3.3), "B")
    return scene.to_svg()


# --- output ----------------------------------------------------------------


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None or out_path == "-":
        sys.stdout.write(text)
        return
    path = Path(out_path)
    fd, tmp_name = tempfile.mkstemp(dir=path.parent or Path("."), prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp_name, path)
    except BaseException:
        try:
            os.unlink(tmp_name)
        except OSError:
            pass
        raise


# --- commands --------------------------------------------------------------


def _check_precision(precision: int) -> None:
    if not 1 <= precision <= 15:
        raise BadRange(f"precision must lie in [1, 15], got {precision}")


def _run_curve(args: argparse.Namespace) -> int:
    _check_precision(args.precision)
    if not 0.0 < args.t_min_deg < args.t_max_deg <= 90.0:
        raise BadRange(
            f"need 0 < t-min < t-max <= 90 degrees, got [{args.t_min_deg}, {args.t_max_deg}]"
        )
    if args.samples < 2:
        raise BadRange(f"need at least 2 samples, got {args.samples}")
    if args.format == "csv":
        text = curve_csv(args.t_min_deg, args.t_max_deg, args.samples, args.precision)
    else:
        text = curve_svg(args.t_min_deg, args.t_max_deg, args.samples, args.precision)
    _emit(text, args.out)
    return 0


def _run_trisect(args: argparse.Namespace) -> int:
    _check_precision(args.precision)
    if not 0.0 < args.angle_deg <= 270.0:
        raise OutOfRange(f"angle must lie in (0, 270] degrees, got {args.angle_deg}")
    if args.tol <= 0.0:
        raise BadRange(f"tolerance must be positive, got {args.tol}")
    fn = construct.trisect_via_curve if args.method == "curve" else construct.trisect_via_scudder
    res = fn(math.radians(args.angle_deg))
    payload, passed = trisect_report(res, args.tol)
    if args.format == "json":
        _emit(_to_json(payload), args.out)
    else:
        _emit(trisect_svg(res, args.precision), args.out)
    return 0 if passed else 1


def _run_simulate(args: argparse.Namespace) -> int:
    _check_precision(args.precision)
    if not 0.0 < args.u_min_deg < args.u_max_deg < 180.0:
        raise BadRange(
            f"need 0 < u-min < u-max < 180 degrees, got [{args.u_min_deg}, {args.u_max_deg}]"
        )
    if args.steps < 2:
        raise BadRange(f"need at least 2 steps, got {args.steps}")
    _emit(simulate_csv(args.u_min_deg, args.u_max_deg, args.steps, args.precision), args.out)
    return 0


def _run_sweep(args: argparse.Namespace) -> int:
    if args.tol <= 0.0:
        raise BadRange(f"tolerance must be positive, got {args.tol}")
    methods = list(construct.METHODS) if args.method == "both" else [args.method]
    reports = [
        construct.sweep_verify(args.from_deg, args.to_deg, args.step_deg, m, args.tol)
        for m in methods
    ]
    if len(reports) == 1:
        payload = sweep_report_dict(reports[0])
    else:
        payload = {r.method: sweep_report_dict(r) for r in reports}
    _emit(_to_json(payload), args.out)
    return 0 if all(not r.failures for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trisectrix",
        description="Trace the carpenter's-square trisectrix and trisect angles with it.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("curve", help="sample the traced branch to CSV or draw it to SVG")
    p.add_argument("--t-min-deg", type=float, default=math.degrees(curve.DEFAULT_SAMPLE_T_MIN))
    p.add_argument("--t-max-deg", type=float, default=90.0)
    p.add_argument("--samples", type=int, default=512)
    p.add_argument("--format", choices=("csv", "svg"), default="csv")
    p.add_argument("--precision", type=int, default=6)
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.set_defaults(run=_run_curve)

    p = sub.add_parser("trisect", help="trisect an angle and report or draw the construction")
    p.add_argument("--angle-deg", type=float, required=True)
    p.add_argument("--method", choices=("curve", "scudder"), default="curve")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--format", choices=("json", "svg"), default="json")
    p.add_argument("--precision", type=int, default=6)
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.set_defaults(run=_run_trisect)

    p = sub.add_parser("simulate", help="sweep the compass and emit linkage states as CSV")
    p.add_argument("--u-min-deg", type=float, required=True)
    p.add_argument("--u-max-deg", type=float, required=True)
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--precision", type=int, default=6)
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.set_defaults(run=_run_simulate)

    p = sub.add_parser("sweep", help="verify trisection over an angle grid, report as JSON")
    p.add_argument("--from-deg", type=float, default=1.0)
    p.add_argument("--to-deg", type=float, default=269.0)
    p.add_argument("--step-deg", type=float, default=1.0)
    p.add_argument("--method", choices=("curve", "scudder", "both"), default="both")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.set_defaults(run=_run_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        return args.run(args)
    except TrisectrixError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
