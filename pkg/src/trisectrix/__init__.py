"""Carpenter's-square trisectrix: curve, compass kinematics, and verified trisection."""

from .certificate import Certificate
from .construct import (
    METHOD_CURVE,
    METHOD_SCUDDER,
    SweepReport,
    TrisectionResult,
    sweep_verify,
    trisect_via_curve,
    trisect_via_scudder,
    verify_trisection,
)
from .curve import (
    CurveIntersection,
    half_chord,
    implicit_gradient,
    implicit_value,
    intersect_ray,
    on_trace,
    pick_trisection_point,
    sample_trace,
    trace_point,
)
from .geom import (
    ORIGIN,
    Circle,
    Line,
    Point,
    Ray,
    bisect_angle,
    foot_of_perpendicular,
    intersect_circle_line,
    intersect_lines,
    polar_angle,
    solve_cubic,
)
from .linkage import (
    LinkageState,
    PlacementSolution,
    scudder_place,
    state_from_leg_angle,
    trace_curve,
    verify_placement,
)

__all__ = [
    "Certificate",
    "Circle",
    "CurveIntersection",
    "Line",
    "LinkageState",
    "METHOD_CURVE",
    "METHOD_SCUDDER",
    "ORIGIN",
    "PlacementSolution",
    "Point",
    "Ray",
    "SweepReport",
    "TrisectionResult",
    "bisect_angle",
    "foot_of_perpendicular",
    "half_chord",
    "implicit_gradient",
    "implicit_value",
    "intersect_circle_line",
    "intersect_lines",
    "intersect_ray",
    "on_trace",
    "pick_trisection_point",
    "polar_angle",
    "sample_trace",
    "scudder_place",
    "solve_cubic",
    "state_from_leg_angle",
    "sweep_verify",
    "trace_curve",
    "trace_point",
    "trisect_via_curve",
    "trisect_via_scudder",
    "verify_placement",
    "verify_trisection",
]

__version__ = "0.1.0"
