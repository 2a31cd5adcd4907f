"""Minimal plane-geometry kernel.

Points, rays, lines, and circles in the fixed construction frame (origin
O, +x along the base edge), plus the angle utilities and the real-cubic
solver that the curve module builds on.  All lengths are dimensionless
multiples of the straightedge width; all angles are radians.

Everything here is a pure function over immutable values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    AllCoefficientsZero,
    DistinctOrigins,
    OriginHasNoAngle,
    ParallelLines,
)

# Two unit normals are considered parallel below this cross product.
PARALLEL_TOL = 1e-12

# |r^2 - d^2| below this fraction of r^2 counts as circle-line tangency.
TANGENCY_RTOL = 1e-12


def normalize_angle(a: float) -> float:
    """Wrap an angle to (-pi, pi]."""
    r = math.remainder(a, math.tau)
    if r <= -math.pi:
        r += math.tau
    return r


def ccw_sweep(from_angle: float, to_angle: float) -> float:
    """Counterclockwise sweep from one direction to another, in [0, 2*pi)."""
    return (to_angle - from_angle) % math.tau


def angle_distance(a: float, b: float) -> float:
    """Absolute separation of two directions, ignoring 2*pi wraps."""
    return abs(normalize_angle(a - b))


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite point ({self.x}, {self.y})")

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, k: float) -> "Point":
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def distance_to(self, other: "Point") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


ORIGIN = Point(0.0, 0.0)


def dot(a: Point, b: Point) -> float:
    return a.x * b.x + a.y * b.y


def cross(a: Point, b: Point) -> float:
    return a.x * b.y - a.y * b.x


@dataclass(frozen=True)
class Ray:
    """Half-line from ``origin`` in direction ``angle`` (wrapped to (-pi, pi])."""

    origin: Point
    angle: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "angle", normalize_angle(self.angle))

    @classmethod
    def toward(cls, origin: Point, target: Point) -> "Ray":
        return cls(origin, polar_angle(target - origin))

    def point_at(self, distance: float) -> Point:
        return Point(
            self.origin.x + distance * math.cos(self.angle),
            self.origin.y + distance * math.sin(self.angle),
        )


@dataclass(frozen=True)
class Line:
    """Implicit line a*x + b*y = c with the normal (a, b) kept unit length."""

    a: float
    b: float
    c: float

    def __post_init__(self) -> None:
        n = math.hypot(self.a, self.b)
        if n == 0.0 or not math.isfinite(n) or not math.isfinite(self.c):
            raise ValueError("degenerate line coefficients")
        object.__setattr__(self, "a", self.a / n)
        object.__setattr__(self, "b", self.b / n)
        object.__setattr__(self, "c", self.c / n)

    @classmethod
    def horizontal(cls, y0: float) -> "Line":
        return cls(0.0, 1.0, y0)

    @classmethod
    def vertical(cls, x0: float) -> "Line":
        return cls(1.0, 0.0, x0)

    @classmethod
    def from_points(cls, p: Point, q: Point) -> "Line":
        d = q - p
        return cls(-d.y, d.x, -d.y * p.x + d.x * p.y)

    def signed_distance(self, p: Point) -> float:
        return self.a * p.x + self.b * p.y - self.c


X_AXIS = Line.horizontal(0.0)


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.radius) and self.radius > 0.0):
            raise ValueError(f"circle radius must be finite and positive, got {self.radius}")


def intersect_lines(l1: Line, l2: Line) -> Point:
    """Intersection point of two non-parallel lines."""
    det = l1.a * l2.b - l2.a * l1.b
    if abs(det) <= PARALLEL_TOL:
        raise ParallelLines(f"lines are parallel within {PARALLEL_TOL}")
    x = (l1.c * l2.b - l2.c * l1.b) / det
    y = (l1.a * l2.c - l2.a * l1.c) / det
    return Point(x, y)


def intersect_circle_line(c: Circle, l: Line) -> list[Point]:
    """Circle-line intersection: 0, 1 (tangency), or 2 points.

    Sorted by ascending x, ties broken by ascending y.  A discriminant
    within TANGENCY_RTOL * radius^2 of zero collapses to the single
    tangency point.
    """
    d = l.signed_distance(c.center)
    disc = c.radius * c.radius - d * d
    tol = TANGENCY_RTOL * c.radius * c.radius
    if disc < -tol:
        return []
    foot = Point(c.center.x - d * l.a, c.center.y - d * l.b)
    if disc <= tol:
        return [foot]
    h = math.sqrt(disc)
    p1 = Point(foot.x - h * l.b, foot.y + h * l.a)
    p2 = Point(foot.x + h * l.b, foot.y - h * l.a)
    return sorted((p1, p2), key=lambda p: (p.x, p.y))


def polar_angle(p: Point) -> float:
    """Direction of p from the origin, in (-pi, pi]."""
    if p.x == 0.0 and p.y == 0.0:
        raise OriginHasNoAngle("the origin has no polar angle")
    a = math.atan2(p.y, p.x)
    if a <= -math.pi:
        a += math.tau
    return a


def foot_of_perpendicular(p: Point, l: Line) -> Point:
    """Orthogonal projection of p onto l."""
    d = l.signed_distance(p)
    return Point(p.x - d * l.a, p.y - d * l.b)


def bisect_angle(r1: Ray, r2: Ray) -> Ray:
    """Ray halving the counterclockwise sweep from r1 to r2.

    The sweep is taken in [0, 2*pi), so bisect(90deg, 270deg) points at
    180deg while bisect(270deg, 90deg) points at 0deg.
    """
    if r1.origin != r2.origin:
        raise DistinctOrigins("rays must share an origin")
    return Ray(r1.origin, r1.angle + 0.5 * ccw_sweep(r1.angle, r2.angle))


# --- real-root polynomial solving -----------------------------------------

# Discriminants within this fraction of their magnitude scale are treated
# as zero (repeated roots); float dust from coefficient rounding sits near
# machine epsilon, well under this.
_DISC_RTOL = 1e-13
_QUAD_DISC_RTOL = 1e-12


def _cbrt(x: float) -> float:
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


def solve_cubic(c3: float, c2: float, c1: float, c0: float) -> list[float]:
    """Real roots of c3*r^3 + c2*r^2 + c1*r + c0, ascending, with multiplicity.

    Closed form throughout: the trigonometric method when all three roots
    are real, Cardano's formula otherwise, with one Newton step on the
    original coefficients to polish each simple root.  Repeated roots are
    reported repeated, e.g. -(r-2)^2*(r+1) -> [-1.0, 2.0, 2.0].  A zero
    leading coefficient degrades to the quadratic/linear solve.
    """
    if c3 == 0.0:
        if c2 == 0.0 and c1 == 0.0 and c0 == 0.0:
            raise AllCoefficientsZero("cannot solve 0 = 0")
        return _solve_quadratic(c2, c1, c0)

    def poly(x: float) -> float:
        return ((c3 * x + c2) * x + c1) * x + c0

    def dpoly(x: float) -> float:
        return (3.0 * c3 * x + 2.0 * c2) * x + c1

    def polish(x: float) -> float:
        # up to two guarded Newton steps; one is not always enough to meet
        # the residual bound when the closed form lands far off (severely
        # ill-scaled leading coefficients)
        for _ in range(2):
            d = dpoly(x)
            if d == 0.0:
                break
            step = poly(x) / d
            if not math.isfinite(step) or abs(poly(x - step)) > abs(poly(x)):
                break
            x -= step
        return x

    def rel_residual(x: float) -> float:
        scale = abs(c3 * x ** 3) + abs(c2 * x * x) + abs(c1 * x) + abs(c0)
        return abs(poly(x)) / scale if scale > 0.0 else 0.0

    p = c2 / c3
    q = c1 / c3
    r = c0 / c3
    shift = p / 3.0
    # depressed form z^3 + P*z + Q via x = z - p/3
    P = q - p * p / 3.0
    Q = 2.0 * p ** 3 / 27.0 - p * q / 3.0 + r
    disc = -4.0 * P ** 3 - 27.0 * Q * Q
    disc_scale = 4.0 * abs(P) ** 3 + 27.0 * Q * Q

    if disc_scale == 0.0 or abs(disc) <= _DISC_RTOL * disc_scale:
        if abs(P) <= 1e-12 * max(1.0, p * p) and abs(Q) <= 1e-12 * max(1.0, abs(p) ** 3):
            candidates = [-shift] * 3
        else:
            # (z - alpha)^2 (z + 2*alpha): double root alpha, simple -2*alpha
            alpha = -3.0 * Q / (2.0 * P)
            candidates = sorted([alpha - shift, alpha - shift, polish(-2.0 * alpha - shift)])
        if all(rel_residual(x) <= 1e-6 for x in candidates):
            return candidates
        # A near-zero discriminant can also be an artifact of a depression
        # shift dwarfing the roots (|p| >> |x|); the repeated-root structure
        # is then bogus and the discriminant's sign is pure noise.  The
        # dominant root is still computed stably, so recover the other two
        # by backward deflation from the constant term.
        return _deflate_from_dominant(c3, c2, c1, c0, P, Q, disc, shift, polish)

    if disc > 0.0:
        m = 2.0 * math.sqrt(-P / 3.0)
        theta = math.acos(max(-1.0, min(1.0, 3.0 * Q / (P * m))))
        return sorted(
            polish(m * math.cos((theta - math.tau * k) / 3.0) - shift) for k in range(3)
        )

    # one real root: take the larger-magnitude cube root and recover the
    # other term from u*v = -P/3 to avoid cancellation
    sq = math.sqrt(max(0.0, -disc) / 108.0)
    w = _cbrt(-Q / 2.0 + sq if Q <= 0.0 else -Q / 2.0 - sq)
    return [polish(w - P / (3.0 * w) - shift)]


def _deflate_from_dominant(c3, c2, c1, c0, P, Q, disc, shift, polish) -> list[float]:
    """Roots via the largest-|z| depressed root plus backward deflation.

    Backward synthetic division (constant term first) keeps the deflated
    quadratic accurate when the dominant root is orders of magnitude
    larger than the remaining pair.
    """
    if P < 0.0:
        m = 2.0 * math.sqrt(-P / 3.0)
        theta = math.acos(max(-1.0, min(1.0, 3.0 * Q / (P * m))))
        z_big = max(
            (m * math.cos((theta - math.tau * k) / 3.0) for k in range(3)), key=abs
        )
    else:
        sq = math.sqrt(max(0.0, -disc) / 108.0)
        w = _cbrt(-Q / 2.0 + sq if Q <= 0.0 else -Q / 2.0 - sq)
        z_big = w - P / (3.0 * w)
    x_big = polish(z_big - shift)
    if x_big == 0.0:
        return [-shift] * 3
    # c3 x^3 + c2 x^2 + c1 x + c0 = (x - x_big)(c3 x^2 + b1 x + b0)
    b0 = -c0 / x_big
    b1 = (b0 - c1) / x_big
    rest = [polish(x) for x in _solve_quadratic(c3, b1, b0)]
    return sorted([x_big] + rest)


def _solve_quadratic(a: float, b: float, c: float) -> list[float]:
    if a == 0.0:
        if b == 0.0:
            return []  # nonzero constant: no roots
        return [-c / b]
    disc = b * b - 4.0 * a * c
    disc_scale = b * b + abs(4.0 * a * c)
    if abs(disc) <= _QUAD_DISC_RTOL * disc_scale:
        return [-b / (2.0 * a)] * 2
    if disc < 0.0:
        return []
    sq = math.sqrt(disc)
    if b == 0.0:
        hi = sq / (2.0 * a)
        return sorted([-hi, hi])
    qq = -(b + math.copysign(sq, b)) / 2.0
    return sorted([qq / a, c / qq])
