import numpy as np
import pytest
from numpy.testing import assert_allclose

from holoball import geometry
from holoball.geometry import (
    CoincidentPoints,
    HyperbolicCircle,
    LineMissesBall,
    ParameterOnBoundary,
    TangentLine,
    VerticalLine,
    disc_automorphism,
    fit_line,
    line_through_points,
    make_line,
    moebius,
    moebius_apply_line,
    project_to_hyperbolic_circle,
    sample_circle,
    sphere_intersection,
)

from helpers import kasa_circle_fit


class TestLineThroughPoints:
    def test_axis_line(self):
        line = line_through_points([0, 0], [1, 0])
        assert_allclose(line.direction, [1, 0], atol=1e-15)
        assert_allclose(line.base, [0, 0], atol=1e-15)

    def test_vertical_line_base_already_orthogonal(self):
        line = line_through_points([0.5, 0], [0.5, 0.5])
        assert_allclose(line.direction, [0, 1], atol=1e-15)
        assert_allclose(line.base, [0.5, 0], atol=1e-15)

    def test_roundtrip_through_generic_points(self):
        a = np.array([0.3, 0.1], dtype=complex)
        b = np.array([-0.2, 0.4], dtype=complex)
        line = line_through_points(a, b)
        # Fitted parameters must reproduce the defining points.
        za = line.point(line.parameter_of(a))
        zb = line.point(line.parameter_of(b))
        assert np.max(np.abs(za - a)) <= 1e-12
        assert np.max(np.abs(zb - b)) <= 1e-12
        # Canonical form: base orthogonal to direction, direction unit.
        assert abs(np.sum(line.base * np.conj(line.direction))) <= 1e-12
        assert abs(np.linalg.norm(line.direction) - 1.0) <= 1e-14

    def test_coincident_points_raise(self):
        with pytest.raises(CoincidentPoints):
            line_through_points([0.3, 0.1], [0.3, 0.1])


class TestSphereIntersection:
    def test_unit_circle_through_origin(self):
        circle = sphere_intersection(make_line([0, 0], [1, 0]))
        assert circle.center == 0
        assert circle.radius == pytest.approx(1.0)

    def test_pythagoras(self):
        circle = sphere_intersection(make_line([0.5, 0], [0, 1]))
        assert circle.radius == pytest.approx(np.sqrt(3) / 2, abs=1e-15)

    def test_line_misses_ball(self):
        with pytest.raises(LineMissesBall):
            sphere_intersection(make_line([2, 0], [0, 1]))

    def test_tangent_line(self):
        base = np.array([np.sqrt(1 - 1e-14), 0], dtype=complex)
        with pytest.raises(TangentLine):
            sphere_intersection(geometry.ComplexLine(base=base, direction=np.array([0, 1 + 0j])))


class TestSampleCircle:
    def test_fourth_roots(self):
        samples = sample_circle(sphere_intersection(make_line([0, 0], [1, 0])), 4)
        assert_allclose(samples.zeta, [1, 1j, -1, -1j], atol=1e-15)

    def test_vertical_line_first_coordinate_constant(self):
        samples = sample_circle(sphere_intersection(make_line([0.5, 0], [0, 1])), 8)
        assert_allclose(samples.points[:, 0], 0.5, atol=1e-15)

    def test_points_on_sphere(self):
        line = line_through_points([0.3, 0.1 + 0.2j], [-0.1, 0.4])
        samples = sample_circle(sphere_intersection(line), 512)
        assert np.max(np.abs(np.linalg.norm(samples.points, axis=1) - 1.0)) <= 1e-12

    @pytest.mark.parametrize("n", [3, 6, 0, 100])
    def test_rejects_bad_counts(self, n):
        circle = sphere_intersection(make_line([0, 0], [1, 0]))
        with pytest.raises(ValueError):
            sample_circle(circle, n)


class TestMoebius:
    def test_zero_parameter_is_identity(self):
        m = moebius(0.0)
        z = np.array([0.3 + 0.1j, 0.2], dtype=complex)
        assert_allclose(m(z), z, atol=1e-15)

    def test_maps_center_to_origin(self):
        assert_allclose(moebius(0.5)(np.array([0.5, 0])), [0, 0], atol=1e-12)

    def test_fixes_real_boundary_point(self):
        assert_allclose(moebius(0.5)(np.array([1.0, 0])), [1, 0], atol=1e-12)

    def test_inverse_roundtrip(self):
        rng = np.random.default_rng(5)
        m = moebius(0.3 - 0.4j)
        z = geometry.random_sphere_points(100, 2, rng)
        assert np.max(np.abs(m.inverse()(m(z)) - z)) <= 1e-11

    def test_sphere_to_sphere(self):
        rng = np.random.default_rng(6)
        m = moebius(0.7j)
        z = geometry.random_sphere_points(200, 2, rng)
        assert np.max(np.abs(np.linalg.norm(m(z), axis=1) - 1.0)) <= 1e-12

    def test_parameter_on_boundary(self):
        with pytest.raises(ParameterOnBoundary):
            moebius(1.0 - 1e-12)

    def test_preserves_complex_lines(self):
        rng = np.random.default_rng(7)
        m = moebius(0.25 + 0.35j)
        for _ in range(25):
            line = make_line(
                0.5 * geometry.random_directions(2, 1, rng)[0],
                geometry.random_directions(2, 1, rng)[0],
            )
            samples = sample_circle(sphere_intersection(line), 64)
            _, residual = fit_line(m(samples.points))
            assert residual <= 1e-10

    def test_apply_line_matches_pointwise_image(self):
        m = moebius(0.4)
        line = line_through_points([0.1, 0.2], [-0.3, 0.5j])
        image = moebius_apply_line(m, line)
        samples = sample_circle(sphere_intersection(line), 32)
        mapped = m(samples.points)
        assert float(np.max(image.distance_to(mapped))) <= 1e-10


class TestProjection:
    def test_diagonal_line(self):
        circle = project_to_hyperbolic_circle(line_through_points([0, 0], [1, 1]), 0.0)
        assert circle.radius == pytest.approx(1 / np.sqrt(2), abs=1e-12)

    @pytest.mark.parametrize("k", [0.5, 2.0, 1.0 + 1.0j, 0.3 - 0.7j])
    def test_sloped_lines_through_origin(self, k):
        # z2 = k z1 and |z1|^2 (1 + |k|^2) = 1 on the sphere circle.
        line = line_through_points([0, 0], [1, k])
        circle = project_to_hyperbolic_circle(line, 0.0)
        assert circle.radius == pytest.approx(1 / np.sqrt(1 + abs(k) ** 2), abs=1e-12)

    def test_off_center_constancy(self):
        line = line_through_points([0.5, 0], [1.0, 0.5])  # z2 = z1 - 0.5
        circle = project_to_hyperbolic_circle(line, 0.5)
        samples = sample_circle(sphere_intersection(line), 256)
        u = np.abs(disc_automorphism(0.5, samples.points[:, 0]))
        assert np.max(np.abs(u - circle.radius)) <= 1e-10

    def test_vertical_line_raises(self):
        with pytest.raises(VerticalLine):
            project_to_hyperbolic_circle(make_line([0.3, 0], [0, 1]), 0.3)

    def test_projection_lemma_property(self):
        rng = np.random.default_rng(11)
        count = 0
        while count < 100:
            a1 = 0.9 * np.sqrt(rng.random()) * np.exp(2j * np.pi * rng.random())
            d = geometry.random_directions(2, 1, rng)[0]
            if abs(d[0]) <= 1e-3:
                continue
            line = make_line([a1, 0], d)
            samples = sample_circle(sphere_intersection(line), 128)
            u = np.abs(disc_automorphism(a1, samples.points[:, 0]))
            assert np.std(u) <= 1e-10
            count += 1

    def test_horicycle_tangency(self):
        rng = np.random.default_rng(12)
        count = 0
        while count < 25:
            a1 = np.exp(2j * np.pi * rng.random())
            d = geometry.random_directions(2, 1, rng)[0]
            line = make_line([a1, 0], d)
            try:
                circle = project_to_hyperbolic_circle(line, a1)
            except (VerticalLine, LineMissesBall, TangentLine, ValueError):
                continue
            assert circle.is_horicycle
            # Oracle: fit a Euclidean circle to the projected samples and
            # check internal tangency to the unit circle at a1.
            samples = sample_circle(sphere_intersection(line), 128)
            center, radius = kasa_circle_fit(samples.points[:, 0])
            assert abs(abs(center) + radius - 1.0) <= 1e-8
            tangency = center + radius * center / abs(center)
            assert abs(tangency - a1) <= 1e-8
            assert radius == pytest.approx(circle.radius, abs=1e-8)
            count += 1


class TestHyperbolicCircle:
    def test_euclidean_parameters_match_constancy(self):
        circle = HyperbolicCircle(center=0.4 + 0.2j, radius=0.6)
        w = circle.points(64)
        assert np.max(np.abs(np.abs(disc_automorphism(circle.center, w)) - 0.6)) <= 1e-12
        assert np.max(np.abs(w)) < 1.0

    def test_euclidean_formulas(self):
        a, r = 0.5, 0.3
        circle = HyperbolicCircle(center=a, radius=r)
        assert circle.euclidean_center == pytest.approx(a * (1 - r**2) / (1 - r**2 * a**2))
        assert circle.euclidean_radius == pytest.approx(r * (1 - a**2) / (1 - r**2 * a**2))


def test_random_canonical_lines_stay_on_sphere():
    rng = np.random.default_rng(13)
    checked = 0
    while checked < 1000:
        base = 0.98 * np.sqrt(rng.random()) * geometry.random_directions(2, 1, rng)[0]
        line = make_line(base, geometry.random_directions(2, 1, rng)[0])
        try:
            samples = sample_circle(sphere_intersection(line), 64)
        except (LineMissesBall, TangentLine):
            continue
        assert np.max(np.abs(np.linalg.norm(samples.points, axis=1) - 1.0)) <= 1e-12
        checked += 1


def test_fit_line_recovers_known_line():
    line = line_through_points([0.2, 0.1j], [-0.4, 0.3])
    zeta = np.exp(2j * np.pi * np.arange(16) / 16)
    fitted, residual = fit_line(line.point(zeta))
    assert residual <= 1e-12
    assert float(np.max(fitted.distance_to(line.point(zeta)))) <= 1e-12
