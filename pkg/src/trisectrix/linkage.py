"""Kinematics of the T-square drawing compass and the placement solve.

The compass is a unit-width straightedge laid along the x-axis with a
rotating ring at the origin, plus a T whose long leg slides through the
ring.  The T's top is 2 units long, perpendicular to the leg, with a
pencil at each end: C rides the guide line y = 1 (drawing it), D traces
the curve.  One scalar fixes the whole configuration: the leg angle u.
With the ring-to-top distance s (the slide), the top's midpoint is
E = s * (cos u, sin u) and the pencils sit one unit either side of E
along the perpendicular (sin u, -cos u).  Requiring C to stay on y = 1
gives

    s * sin(u) - cos(u) = 1   =>   s = (1 + cos u) / sin u = cot(u / 2),

computed here in the half-angle form, which stays exact as u -> pi where
the naive quotient cancels to 0/0.

Placing the square to trisect an angle phi means turning the leg until
the tracing pencil D lies on the ray at angle phi.  The map from u to
the polar angle of D is continuous and strictly increasing (it equals
3u/2; asserted on a grid by the test suite), so a bracketed hybrid
root-finder resolves the placement without using any closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .certificate import Certificate
from .errors import BadRange, BracketFailure, OutOfRange
from .geom import (
    ORIGIN,
    X_AXIS,
    Point,
    ccw_sweep,
    dot,
    foot_of_perpendicular,
    polar_angle,
)

# Query angles the compass covers, like the curve trace: (0, 3*pi/2].
PHI_MAX = 1.5 * math.pi

# Bracket endpoints keep strictly inside (0, pi); the solver resolves a
# query at exactly 3*pi/2 by returning the bracket-endpoint state.
_BRACKET_EPS = 1e-9
_MAX_ITERATIONS = 200
_RESIDUAL_TARGET = 1e-12


@dataclass(frozen=True)
class LinkageState:
    """One configuration of the compass.

    u: leg angle from the origin ring, in (0, pi).
    s: slide distance |OE| of the top's midpoint along the leg, > 0.
    C: guide pencil, on y = 1.   D: tracing pencil.   E: midpoint of CD.
    """

    u: float
    s: float
    C: Point
    D: Point
    E: Point


@dataclass(frozen=True)
class PlacementSolution:
    """A solved placement: the state whose tracing pencil lies on the target ray."""

    state: LinkageState
    phi: float
    residual: float
    iterations: int


def state_from_leg_angle(u: float) -> LinkageState:
    """Compass configuration at leg angle u in (0, pi)."""
    if not 0.0 < u < math.pi:
        raise OutOfRange(f"leg angle must lie in (0, pi), got {u}")
    half = 0.5 * u
    s = math.cos(half) / math.sin(half)
    cu, su = math.cos(u), math.sin(u)
    E = Point(s * cu, s * su)
    C = Point(E.x + su, E.y - cu)
    D = Point(E.x - su, E.y + cu)
    return LinkageState(u, s, C, D, E)


def trace_curve(u_min: float, u_max: float, steps: int) -> list[LinkageState]:
    """Sweep the leg over [u_min, u_max] in ``steps`` uniform increments, inclusive."""
    if not 0.0 < u_min < u_max < math.pi:
        raise BadRange(f"need 0 < u_min < u_max < pi, got [{u_min}, {u_max}]")
    if steps < 2:
        raise BadRange(f"need at least 2 steps, got {steps}")
    du = (u_max - u_min) / (steps - 1)
    us = [u_min + i * du for i in range(steps - 1)] + [u_max]
    return [state_from_leg_angle(u) for u in us]


def _tip_angle_unwrapped(state: LinkageState) -> float:
    """Polar angle of the tracing pencil, unwrapped to (0, 2*pi).

    The tip sweeps from 0+ up through 3*pi/2 as u runs over (0, pi), so
    lifting negative atan2 results by 2*pi makes the map continuous and
    strictly increasing over the whole leg range.
    """
    a = polar_angle(state.D)
    return a + math.tau if a < 0.0 else a


def scudder_place(phi: float) -> PlacementSolution:
    """Place the square so the tracing pencil lies on the ray at angle phi.

    Bracketed hybrid root solve (secant acceleration with bisection
    fallback) on the monotone map u -> polar angle of D, over the bracket
    (eps, pi - eps).  A query beyond the bracket's reach (phi at the
    3*pi/2 closure point) resolves to the endpoint state.
    """
    if not 0.0 < phi <= PHI_MAX:
        raise OutOfRange(f"trisection angle must lie in (0, 3*pi/2], got {phi}")

    def residual_at(u: float) -> tuple[float, LinkageState]:
        st = state_from_leg_angle(u)
        return _tip_angle_unwrapped(st) - phi, st

    lo, hi = _BRACKET_EPS, math.pi - _BRACKET_EPS
    g_lo, st_lo = residual_at(lo)
    if g_lo >= 0.0:
        return PlacementSolution(st_lo, phi, abs(g_lo), 0)
    g_hi, st_hi = residual_at(hi)
    if g_hi <= 0.0:
        return PlacementSolution(st_hi, phi, abs(g_hi), 0)

    best_g, best_st = g_hi, st_hi
    last_side = ""
    same_side = 0
    for iteration in range(1, _MAX_ITERATIONS + 1):
        if same_side >= 2:
            u_new = 0.5 * (lo + hi)  # force bisection when one side stalls
        else:
            u_new = hi - g_hi * (hi - lo) / (g_hi - g_lo)
            if not math.isfinite(u_new) or not lo < u_new < hi:
                u_new = 0.5 * (lo + hi)
        g_new, st_new = residual_at(u_new)
        if abs(g_new) < abs(best_g):
            best_g, best_st = g_new, st_new
        if abs(g_new) <= _RESIDUAL_TARGET or (hi - lo) <= 1e-15:
            return PlacementSolution(st_new, phi, abs(g_new), iteration)
        side = "lo" if g_new < 0.0 else "hi"
        if side == "lo":
            lo, g_lo = u_new, g_new
        else:
            hi, g_hi = u_new, g_new
        same_side = same_side + 1 if side == last_side else 1
        last_side = side

    if abs(best_g) <= 1e-10:
        return PlacementSolution(best_st, phi, abs(best_g), _MAX_ITERATIONS)
    raise BracketFailure(
        f"placement solve did not converge for phi={phi}; residual {best_g:.3e}"
    )


def verify_placement(sol: PlacementSolution, tol: float) -> Certificate:
    """Check the congruence conditions that make the placement a trisection.

    The three right triangles sharing the hypotenuses OC and OD are
    congruent exactly when: the top has length 2 with the guide pencil on
    y = 1 (so the corner hangs one unit above the base), the leg is
    perpendicular to the top, and |OC| = |OD|.  Those give three equal
    sectors between the base ray, OC, OE, and OD.
    """
    if tol <= 0.0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    st = sol.state
    top = st.D - st.C
    top_len = top.norm()
    leg_len = st.E.norm()
    foot = foot_of_perpendicular(st.C, X_AXIS)

    ang_c = polar_angle(st.C)
    ang_e = polar_angle(st.E)
    ang_d = polar_angle(st.D)
    sector_1 = ccw_sweep(0.0, ang_c)
    sector_2 = ccw_sweep(ang_c, ang_e)
    sector_3 = ccw_sweep(ang_e, ang_d)

    residuals = {
        "top_length": abs(top_len - 2.0),
        "corner_on_guide": abs(st.C.y - 1.0),
        "leg_perpendicular_to_top": abs(dot(st.E, top)) / (leg_len * top_len),
        "corner_height_above_base": abs(st.C.distance_to(foot) - 1.0),
        "equal_hypotenuses": abs(st.C.distance_to(ORIGIN) - st.D.distance_to(ORIGIN)),
        "sectors_base_vs_mid": abs(sector_1 - sector_2),
        "sectors_mid_vs_top": abs(sector_2 - sector_3),
        "sectors_base_vs_top": abs(sector_1 - sector_3),
    }
    return Certificate.from_residuals(residuals, tol)
