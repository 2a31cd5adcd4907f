"""Tests for the end-to-end trisection pipelines and their verification."""

import dataclasses
import math

import pytest

from trisectrix.construct import (
    GUIDE_LINE,
    METHOD_CURVE,
    TOP_LENGTH,
    TrisectionResult,
    complete_curve_construction,
    sweep_verify,
    trisect_via_curve,
    trisect_via_scudder,
    verify_trisection,
)
from trisectrix.curve import intersect_ray, pick_trisection_point
from trisectrix.errors import BadRange, OutOfRange
from trisectrix.geom import (
    ORIGIN,
    Circle,
    Line,
    Ray,
    angle_distance,
    bisect_angle,
    intersect_circle_line,
)

SQRT3 = math.sqrt(3.0)


class TestCurveMethod:
    def test_right_angle(self):
        res = trisect_via_curve(math.pi / 2)
        assert abs(res.D.x) <= 1e-12 and res.D.y == pytest.approx(2.0, abs=1e-12)
        assert res.C.x == pytest.approx(SQRT3, abs=1e-12)
        assert res.C.y == pytest.approx(1.0, abs=1e-12)
        assert angle_distance(res.ray1.angle, math.pi / 6) <= 1e-12
        assert angle_distance(res.ray2.angle, math.pi / 3) <= 1e-12
        assert res.residual_rad <= 1e-12

    def test_straight_angle(self):
        res = trisect_via_curve(math.pi)
        assert res.D.x == pytest.approx(-1.1547005383792515, abs=1e-9)
        assert res.C.x == pytest.approx(0.5773502691896258, abs=1e-9)
        assert angle_distance(res.ray1.angle, math.pi / 3) <= 1e-9
        assert angle_distance(res.ray2.angle, 2 * math.pi / 3) <= 1e-9

    def test_tangency_at_full_range(self):
        res = trisect_via_curve(1.5 * math.pi)
        assert res.D.y == pytest.approx(-1.0, abs=1e-9)
        assert abs(res.C.x) <= 1e-9
        assert res.C.y == pytest.approx(1.0, abs=1e-12)
        assert angle_distance(res.ray1.angle, math.pi / 2) <= 1e-9
        assert angle_distance(res.ray2.angle, math.pi) <= 1e-9
        # the radius-2 circle is tangent to the guide line down there
        assert len(intersect_circle_line(Circle(res.D, TOP_LENGTH), GUIDE_LINE)) == 1

    def test_range_validation(self):
        for phi in (0.0, -0.2, 1.5 * math.pi + 1e-9):
            with pytest.raises(OutOfRange):
                trisect_via_curve(phi)

    def test_ray2_doubles_ray1(self):
        for deg in range(1, 270, 3):
            res = trisect_via_curve(math.radians(deg))
            assert angle_distance(res.ray2.angle, 2.0 * res.ray1.angle) <= 1e-9


class TestScudderMethod:
    def test_right_angle(self):
        res = trisect_via_scudder(math.pi / 2)
        assert angle_distance(res.ray1.angle, math.pi / 6) <= 1e-9
        assert angle_distance(res.ray2.angle, math.pi / 3) <= 1e-9

    def test_hundred_twenty_degrees(self):
        res = trisect_via_scudder(2.0 * math.pi / 3)
        assert angle_distance(res.ray1.angle, 2.0 * math.pi / 9) <= 1e-9
        assert angle_distance(res.ray2.angle, 4.0 * math.pi / 9) <= 1e-9

    def test_small_angle_stress(self):
        phi = 1e-4
        res = trisect_via_scudder(phi)
        assert angle_distance(res.ray1.angle, phi / 3.0) <= 1e-9
        assert angle_distance(res.ray2.angle, 2.0 * phi / 3.0) <= 1e-9

    def test_range_validation(self):
        with pytest.raises(OutOfRange):
            trisect_via_scudder(0.0)


class TestVerifyTrisection:
    def test_curve_result_passes(self):
        assert verify_trisection(trisect_via_curve(math.pi / 2), 1e-9).passed

    def test_scudder_result_passes(self):
        assert verify_trisection(trisect_via_scudder(math.pi), 1e-9).passed

    def test_skewed_ray_is_detected(self):
        res = trisect_via_curve(math.pi / 2)
        bad = dataclasses.replace(res, ray1=Ray(ORIGIN, res.ray1.angle + 1e-3))
        cert = verify_trisection(bad, 1e-9)
        assert not cert.passed
        failing = cert.failing()
        assert "ray1_at_third" in failing
        assert "equal_sectors" in failing

    def test_bad_tolerance(self):
        with pytest.raises(ValueError):
            verify_trisection(trisect_via_curve(1.0), 0.0)


class TestMethodAgreement:
    def test_witness_points_and_rays_agree(self):
        for deg in range(1, 270, 7):
            phi = math.radians(deg)
            a = trisect_via_curve(phi)
            b = trisect_via_scudder(phi)
            assert a.C.distance_to(b.C) <= 1e-6, deg
            assert angle_distance(a.ray1.angle, b.ray1.angle) <= 1e-7
            assert angle_distance(a.ray2.angle, b.ray2.angle) <= 1e-7


class TestRightmostRule:
    def test_wrong_candidate_fails_verification(self):
        for deg in range(5, 270, 11):
            phi = math.radians(deg)
            d = pick_trisection_point(phi)
            points = intersect_circle_line(Circle(d, TOP_LENGTH), GUIDE_LINE)
            rightmost = points[-1]
            res = complete_curve_construction(phi, d)
            assert res.C == rightmost
            assert verify_trisection(res, 1e-9).passed
            if len(points) == 2:
                wrong_c = points[0]
                ray1 = Ray.toward(ORIGIN, wrong_c)
                ray2 = bisect_angle(ray1, Ray.toward(ORIGIN, d))
                wrong = TrisectionResult(
                    phi, METHOD_CURVE, ray1, ray2, wrong_c, d, abs(ray1.angle - phi / 3.0)
                )
                assert not verify_trisection(wrong, 1e-9).passed


class TestScaleInvariance:
    def test_construction_scales_linearly(self):
        # at width lam the guide line sits at y = lam, the top is 2*lam long,
        # and the curve is the unit curve scaled by lam
        for lam in (0.5, 2.0, 10.0):
            for deg in (25.0, 90.0, 150.0, 230.0):
                phi = math.radians(deg)
                unit = trisect_via_curve(phi)
                d_scaled = lam * pick_trisection_point(phi)
                points = intersect_circle_line(
                    Circle(d_scaled, TOP_LENGTH * lam), Line.horizontal(lam)
                )
                c_scaled = points[-1]
                assert c_scaled.distance_to(lam * unit.C) <= 1e-12 * lam * max(1.0, unit.C.norm())
                ray1 = Ray.toward(ORIGIN, c_scaled)
                ray2 = bisect_angle(ray1, Ray.toward(ORIGIN, d_scaled))
                assert angle_distance(ray1.angle, unit.ray1.angle) <= 1e-12
                assert angle_distance(ray2.angle, unit.ray2.angle) <= 1e-12


class TestSpuriousBranch:
    def test_mirror_candidate_fails_the_pipeline(self):
        for deg in (30.0, 120.0):
            phi = math.radians(deg)
            hits = intersect_ray(phi)
            assert len(hits) >= 2
            mirrors = [h for h in hits if not h.on_trace]
            assert mirrors
            forced = complete_curve_construction(phi, mirrors[0].point)
            assert not verify_trisection(forced, 1e-9).passed


class TestSweepVerify:
    def test_single_row(self):
        rep = sweep_verify(10.0, 10.0, 1.0, "curve")
        assert rep.count == 1
        assert rep.max_error_rad <= 1e-9
        assert rep.argmax_phi_deg == 10.0
        assert rep.failures == ()

    def test_aggregates_are_consistent(self):
        rep = sweep_verify(1.0, 30.0, 1.0, "scudder")
        assert rep.count == 30
        assert rep.max_error_rad >= rep.mean_error_rad >= 0.0
        assert rep.failures == ()

    def test_range_validation(self):
        with pytest.raises(BadRange):
            sweep_verify(0.0, 30.0, 1.0, "curve")
        with pytest.raises(BadRange):
            sweep_verify(30.0, 10.0, 1.0, "curve")
        with pytest.raises(BadRange):
            sweep_verify(1.0, 270.0, 1.0, "curve")
        with pytest.raises(BadRange):
            sweep_verify(1.0, 30.0, 0.0, "curve")
        with pytest.raises(ValueError):
            sweep_verify(1.0, 30.0, 1.0, "nonsense")
