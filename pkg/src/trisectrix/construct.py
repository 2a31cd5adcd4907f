"""End-to-end trisection pipelines, verification, and sweep statistics.

Two independent routes produce the trisecting rays for an angle phi:

curve method -- intersect the ray at phi with the traced curve to get D,
draw the circle of radius 2 about D, take its right-most intersection C
with the guide line y = 1, and bisect the angle COD.  OC is the first
trisecting ray; the bisector is the second.

Scudder method -- solve the physical placement of the T-square (inside
edge through the vertex, 2-unit top mark on the far side of the angle,
corner on the guide line) and read the rays toward the corner C and
along the inside edge OE.

Both constructions are verified by an independent certificate of
congruence residuals rather than by re-running either pipeline.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import curve, linkage
from .certificate import Certificate
from .errors import BadRange, EmptyIntersection, OutOfRange
from .geom import (
    ORIGIN,
    Circle,
    Line,
    Point,
    Ray,
    angle_distance,
    bisect_angle,
    ccw_sweep,
    intersect_circle_line,
    polar_angle,
)

PHI_MAX = 1.5 * math.pi

METHOD_CURVE = "curve"
METHOD_SCUDDER = "scudder"
METHODS = (METHOD_CURVE, METHOD_SCUDDER)

GUIDE_LINE = Line.horizontal(1.0)
TOP_LENGTH = 2.0


@dataclass(frozen=True)
class TrisectionResult:
    """The two claimed trisecting rays plus the witness points they came from.

    ray1 claims angle phi/3, ray2 claims 2*phi/3; both originate at O.
    residual_rad is |ray1.angle - phi/3|.
    """

    phi: float
    method: str
    ray1: Ray
    ray2: Ray
    C: Point
    D: Point
    residual_rad: float

    def midpoint_e(self) -> Point:
        """Midpoint of CD; lies on ray2 because OCD is isosceles."""
        return Point(0.5 * (self.C.x + self.D.x), 0.5 * (self.C.y + self.D.y))


@dataclass(frozen=True)
class SweepReport:
    """Aggregate error statistics for one method over a grid of angles (degrees in/out)."""

    phi_min_deg: float
    phi_max_deg: float
    step_deg: float
    method: str
    count: int
    max_error_rad: float
    mean_error_rad: float
    argmax_phi_deg: float
    failures: tuple[float, ...]


def _check_phi(phi: float) -> None:
    if not 0.0 < phi <= PHI_MAX:
        raise OutOfRange(f"trisection angle must lie in (0, 3*pi/2], got {phi}")


def complete_curve_construction(phi: float, d: Point) -> TrisectionResult:
    """Finish the curve-method construction from a given curve point D.

    Split out so the spurious (mirror-branch) candidate can be forced
    through the identical steps and shown to fail verification.
    """
    points = intersect_circle_line(Circle(d, TOP_LENGTH), GUIDE_LINE)
    if not points:
        raise EmptyIntersection(f"radius-2 circle at {d} missed the guide line")
    c = points[-1]  # sorted ascending x: last is the right-most
    ray1 = Ray.toward(ORIGIN, c)
    ray2 = bisect_angle(ray1, Ray.toward(ORIGIN, d))
    residual = abs(ray1.angle - phi / 3.0)
    return TrisectionResult(phi, METHOD_CURVE, ray1, ray2, c, d, residual)


def trisect_via_curve(phi: float) -> TrisectionResult:
    """Trisect phi in (0, 3*pi/2] using the traced curve."""
    _check_phi(phi)
    return complete_curve_construction(phi, curve.pick_trisection_point(phi))


def trisect_via_scudder(phi: float) -> TrisectionResult:
    """Trisect phi in (0, 3*pi/2] by solving the physical square placement."""
    _check_phi(phi)
    sol = linkage.scudder_place(phi)
    st = sol.state
    ray1 = Ray.toward(ORIGIN, st.C)
    ray2 = Ray.toward(ORIGIN, st.E)  # the inside-edge ray
    residual = abs(ray1.angle - phi / 3.0)
    return TrisectionResult(phi, METHOD_SCUDDER, ray1, ray2, st.C, st.D, residual)


def verify_trisection(res: TrisectionResult, tol: float) -> Certificate:
    """Certificate that the claimed rays actually trisect, from residuals alone.

    Checks the two ray angles against phi/3 and 2*phi/3, the equality of
    the three swept sectors, and the witness geometry (D on the target
    ray, C on the guide line, |CD| = 2).
    """
    if tol <= 0.0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    sector_1 = ccw_sweep(0.0, res.ray1.angle)
    sector_2 = ccw_sweep(res.ray1.angle, res.ray2.angle)
    sector_3 = ccw_sweep(res.ray2.angle, res.phi)
    residuals = {
        "ray1_at_third": angle_distance(res.ray1.angle, res.phi / 3.0),
        "ray2_at_two_thirds": angle_distance(res.ray2.angle, 2.0 * res.phi / 3.0),
        "equal_sectors": max(
            abs(sector_1 - sector_2), abs(sector_2 - sector_3), abs(sector_1 - sector_3)
        ),
        "d_on_target_ray": angle_distance(polar_angle(res.D), res.phi),
        "c_on_guide": abs(res.C.y - 1.0),
        "cd_length": abs(res.C.distance_to(res.D) - TOP_LENGTH),
    }
    return Certificate.from_residuals(residuals, tol)


_METHOD_FNS = {METHOD_CURVE: trisect_via_curve, METHOD_SCUDDER: trisect_via_scudder}


def sweep_verify(
    phi_min_deg: float,
    phi_max_deg: float,
    step_deg: float,
    method: str,
    tol: float = 1e-9,
) -> SweepReport:
    """Run one method plus verification over a degree grid and aggregate errors.

    The per-angle error is the larger of the two ray-angle residuals (in
    radians); ``failures`` lists the grid angles whose certificate failed
    at ``tol``.
    """
    if method not in _METHOD_FNS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    if not 0.0 < phi_min_deg <= phi_max_deg or phi_max_deg >= 270.0 or step_deg <= 0.0:
        raise BadRange(
            f"need 0 < from <= to < 270 and step > 0, got [{phi_min_deg}, {phi_max_deg}] step {step_deg}"
        )
    fn = _METHOD_FNS[method]

    grid = []
    k = 0
    while True:
        phi_deg = phi_min_deg + k * step_deg
        if phi_deg > phi_max_deg + 1e-9 * step_deg:
            break
        grid.append(phi_deg)
        k += 1

    max_err = 0.0
    err_sum = 0.0
    argmax = grid[0]
    failures: list[float] = []
    for phi_deg in grid:
        res = fn(math.radians(phi_deg))
        cert = verify_trisection(res, tol)
        err = max(cert.residuals["ray1_at_third"], cert.residuals["ray2_at_two_thirds"])
        err_sum += err
        if err > max_err:
            max_err, argmax = err, phi_deg
        if not cert.passed:
            failures.append(phi_deg)

    return SweepReport(
        phi_min_deg=phi_min_deg,
        phi_max_deg=phi_max_deg,
        step_deg=step_deg,
        method=method,
        count=len(grid),
        max_error_rad=max_err,
        mean_error_rad=err_sum / len(grid),
        argmax_phi_deg=argmax,
        failures=tuple(failures),
    )
