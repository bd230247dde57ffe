"""Geometry of complex lines and the unit ball of C^n.

Affine complex lines are stored in a canonical form: the base point is the
point of the line closest to the origin, hence Hermitian-orthogonal to the
unit direction vector.  In this form the intersection of a line with the
unit sphere is a circle centred at parameter 0, which keeps every angular
quadrature downstream uniform (no per-line special cases).

Conventions
-----------
* Points of C^n are 1-d complex ndarrays (n >= 2); batches use shape
  (..., n).
* The Hermitian inner product is <u, v> = sum_j u_j * conj(v_j).
* Disc automorphisms u_a(w) = (w - a) / (1 - conj(a) w) appear both on
  their own and as the first coordinate of the ball automorphism
  ``MoebiusMap``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "CoincidentPoints",
    "LineMissesBall",
    "TangentLine",
    "ParameterOnBoundary",
    "VerticalLine",
    "ComplexLine",
    "SphereCircle",
    "CircleSamples",
    "MoebiusMap",
    "HyperbolicCircle",
    "as_point",
    "hdot",
    "cnorm",
    "make_line",
    "line_through_points",
    "sphere_intersection",
    "sample_circle",
    "moebius",
    "moebius_apply_line",
    "disc_automorphism",
    "project_to_hyperbolic_circle",
    "fit_line",
    "axis_unitary",
    "random_directions",
    "random_lines_through",
    "random_sphere_points",
]

# Lines meeting the sphere in a circle of radius below this are rejected as
# tangent: the extension condition is vacuous and ill-conditioned there.
TANGENT_RADIUS = 1e-6


class CoincidentPoints(ValueError):
    """Two points required to be distinct coincide."""


class LineMissesBall(ValueError):
    """The line does not meet the open unit ball."""


class TangentLine(ValueError):
    """The line meets the sphere in a single point (or nearly so)."""


class ParameterOnBoundary(ValueError):
    """Moebius parameter too close to the unit circle."""


class VerticalLine(ValueError):
    """A line z1 = const degenerates under first-coordinate projection."""


def as_point(z) -> np.ndarray:
    """Coerce ``z`` to a 1-d complex point of C^n, n >= 2."""
    coords = np.atleast_1d(np.asarray(z, dtype=complex))
    if coords.ndim != 1 or coords.size < 2:
        raise ValueError(f"expected a point of C^n with n >= 2, got shape {coords.shape}")
    if not np.all(np.isfinite(coords)):
        raise ValueError("point has non-finite coordinates")
    return coords


def hdot(u, v):
    """Hermitian inner product sum(u * conj(v)) along the last axis."""
    return np.sum(np.asarray(u) * np.conj(np.asarray(v)), axis=-1)


def cnorm(z):
    """Euclidean norm sqrt(sum |z_j|^2) along the last axis."""
    return np.linalg.norm(np.asarray(z, dtype=complex), axis=-1)


@dataclass(frozen=True)
class ComplexLine:
    """Affine complex line {base + zeta * direction : zeta in C}.

    ``base`` is the point of the line closest to the origin and ``direction``
    has unit norm, so <base, direction> = 0.  Use :func:`make_line` or
    :func:`line_through_points` to construct instances in canonical form.
    """

    base: np.ndarray
    direction: np.ndarray

    @property
    def dim(self) -> int:
        return self.base.size

    def point(self, zeta):
        """Point(s) base + zeta * direction; ``zeta`` may be an array."""
        zeta = np.asarray(zeta, dtype=complex)
        return self.base + zeta[..., None] * self.direction

    def parameter_of(self, z):
        """Parameter of the orthogonal projection of ``z`` onto the line."""
        return hdot(np.asarray(z, dtype=complex) - self.base, self.direction)

    def distance_to(self, z):
        """Euclidean distance from ``z`` to the line."""
        z = np.asarray(z, dtype=complex)
        residual = z - self.base - self.parameter_of(z)[..., None] * self.direction
        return cnorm(residual)


def make_line(point, direction) -> ComplexLine:
    """Canonical line through ``point`` with the given direction."""
    point = as_point(point)
    direction = as_point(direction)
    if point.size != direction.size:
        raise ValueError("point and direction dimensions differ")
    dnorm = cnorm(direction)
    if dnorm < 1e-14:
        raise ValueError("direction is numerically zero")
    d = direction / dnorm
    base = point - hdot(point, d) * d
    return ComplexLine(base=base, direction=d)


def line_through_points(a, b) -> ComplexLine:
    """Canonical complex line containing the two distinct points a, b."""
    a = as_point(a)
    b = as_point(b)
    if a.size != b.size:
        raise ValueError("points live in different dimensions")
    if np.max(np.abs(a - b)) <= 1e-14:
        raise CoincidentPoints("line through two points requires distinct points")
    return make_line(a, b - a)


@dataclass(frozen=True)
class SphereCircle:
    """Intersection L /\\ unit sphere = {base + zeta d : |zeta - center| = radius}.

    For canonical lines the parameter-plane center is always 0 and the
    radius is sqrt(1 - |base|^2).
    """

    line: ComplexLine
    center: complex
    radius: float


def sphere_intersection(line: ComplexLine) -> SphereCircle:
    """Circle in which ``line`` meets the unit sphere of C^n."""
    b2 = float(np.sum(np.abs(line.base) ** 2))
    if b2 >= 1.0:
        raise LineMissesBall(f"line base norm {np.sqrt(b2):.6g} >= 1, no sphere circle")
    rho = float(np.sqrt(1.0 - b2))
    if rho < TANGENT_RADIUS:
        raise TangentLine(f"sphere circle radius {rho:.3g} below {TANGENT_RADIUS:g}")
    return SphereCircle(line=line, center=0j, radius=rho)


@dataclass(frozen=True)
class CircleSamples:
    """Equispaced samples of a sphere circle: angles, parameters, points."""

    theta: np.ndarray
    zeta: np.ndarray
    points: np.ndarray


def sample_circle(circle: SphereCircle, n: int) -> CircleSamples:
    """Sample the sphere circle at n equispaced angles theta_k = 2 pi k / n.

    n must be a power of two, n >= 4, so the samples feed FFTs directly.
    """
    if n < 4 or (n & (n - 1)) != 0:
        raise ValueError(f"sample count must be a power of two >= 4, got {n}")
    theta = 2.0 * np.pi * np.arange(n) / n
    zeta = circle.center + circle.radius * np.exp(1j * theta)
    points = circle.line.point(zeta)
    return CircleSamples(theta=theta, zeta=zeta, points=points)


@dataclass(frozen=True)
class MoebiusMap:
    """Automorphism of the unit ball of C^2 attached to the point (a1, 0).

    U(z1, z2) = ((z1 - a1) / (1 - conj(a1) z1),
                 sqrt(1 - |a1|^2) z2 / (1 - conj(a1) z1))

    It maps the sphere to the sphere, sends (a1, 0) to the origin and
    preserves complex lines.  The inverse is the map attached to -a1.
    """

    a1: complex

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        if z.shape[-1] != 2:
            raise ValueError("MoebiusMap acts on points of C^2")
        z1 = z[..., 0]
        z2 = z[..., 1]
        denom = 1.0 - np.conj(self.a1) * z1
        s = np.sqrt(1.0 - abs(self.a1) ** 2)
        return np.stack([(z1 - self.a1) / denom, s * z2 / denom], axis=-1)

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap(a1=-self.a1)


def moebius(a1) -> MoebiusMap:
    """Ball automorphism for the interior point (a1, 0), |a1| <= 1 - 1e-9."""
    a1 = complex(a1)
    if abs(a1) > 1.0 - 1e-9:
        raise ParameterOnBoundary(f"|a1| = {abs(a1):.12g} too close to the unit circle")
    return MoebiusMap(a1=a1)


def moebius_apply_line(m: MoebiusMap, line: ComplexLine) -> ComplexLine:
    """Image of a line under a ball automorphism, recanonicalized.

    Uses two interior points of the line; the image of a complex line under
    ``MoebiusMap`` is again a complex line.
    """
    circle = sphere_intersection(line)
    p = m(line.point(0.0))
    q = m(line.point(0.5 * circle.radius))
    return line_through_points(p, q)


def disc_automorphism(a1, w):
    """u_a(w) = (w - a1) / (1 - conj(a1) w) on the unit disc."""
    w = np.asarray(w, dtype=complex)
    return (w - a1) / (1.0 - np.conj(a1) * w)


@dataclass(frozen=True)
class HyperbolicCircle:
    """Circle of constant pseudo-hyperbolic distance in the unit disc.

    For an interior center (|center| < 1) this is the set
    |u_center(w)| = radius with 0 < radius < 1.  For |center| = 1 the object
    is the horicycle through ``center``: the Euclidean circle of radius
    ``radius`` internally tangent to the unit circle at ``center`` (here
    ``radius`` is the Euclidean radius).
    """

    center: complex
    radius: float

    @property
    def is_horicycle(self) -> bool:
        return abs(self.center) >= 1.0 - 1e-12

    @property
    def euclidean_center(self) -> complex:
        if self.is_horicycle:
            return self.center * (1.0 - self.radius)
        a, r = self.center, self.radius
        return a * (1.0 - r**2) / (1.0 - r**2 * abs(a) ** 2)

    @property
    def euclidean_radius(self) -> float:
        if self.is_horicycle:
            return self.radius
        a, r = self.center, self.radius
        return r * (1.0 - abs(a) ** 2) / (1.0 - r**2 * abs(a) ** 2)

    def points(self, n: int) -> np.ndarray:
        """n equispaced points in the circle's own angle about its Euclidean center."""
        theta = 2.0 * np.pi * np.arange(n) / n
        return self.euclidean_center + self.euclidean_radius * np.exp(1j * theta)


def project_to_hyperbolic_circle(line: ComplexLine, a1) -> HyperbolicCircle:
    """First-coordinate projection of L /\\ sphere for a line through (a1, 0).

    The projection of the sphere circle of any complex line through (a1, 0)
    in C^2 is a circle of constant pseudo-hyperbolic distance from a1; for
    |a1| = 1 it is a horicycle internally tangent at a1.

    Raises ``VerticalLine`` when the line is {z1 = a1} (the projection
    collapses to the single point a1).
    """
    a1 = complex(a1)
    if line.dim != 2:
        raise ValueError("projection is defined for lines in C^2")
    if float(line.distance_to(np.array([a1, 0.0], dtype=complex))) > 1e-9:
        raise ValueError("line does not pass through (a1, 0)")
    d1 = complex(line.direction[0])
    if abs(d1) <= 1e-12:
        raise VerticalLine("line z1 = a1 projects to a single point")

    if abs(a1) >= 1.0 - 1e-12:
        # Horicycle: |d1|^2 follows from |a1 + zeta d1|^2 + |zeta d2|^2 = 1,
        # which forces zeta onto a circle through 0 of radius |d1 conj(a1)|.
        r = abs(d1) ** 2
        if r >= 1.0 - 1e-12:
            raise ValueError("projection degenerates to the unit circle itself")
        # Guard: the line must still meet the open ball.
        sphere_intersection(line)
        return HyperbolicCircle(center=a1, radius=r)

    samples = sample_circle(sphere_intersection(line), 256)
    u = disc_automorphism(a1, samples.points[:, 0])
    r = float(np.mean(np.abs(u)))
    if not 0.0 < r < 1.0:
        raise ValueError(f"projected pseudo-hyperbolic radius {r:.6g} out of range")
    return HyperbolicCircle(center=a1, radius=r)


def fit_line(points) -> tuple[ComplexLine, float]:
    """Best-fit complex line through a cloud of points, with max residual.

    The direction is the top right-singular vector of the centred cloud;
    the residual is the largest Euclidean distance of a point to the fitted
    line.
    """
    pts = np.asarray(points, dtype=complex)
    if pts.ndim != 2 or pts.shape[0] < 2:
        raise ValueError("need at least two points of C^n")
    center = pts.mean(axis=0)
    _, _, vh = np.linalg.svd(pts - center, full_matrices=False)
    line = make_line(center, vh[0])
    residual = float(np.max(line.distance_to(pts)))
    return line, residual


def axis_unitary(u) -> np.ndarray:
    """2x2 unitary matrix sending the unit vector u in C^2 to (1, 0)."""
    u = as_point(u)
    if u.size != 2:
        raise ValueError("axis_unitary is defined on C^2")
    n = cnorm(u)
    if abs(n - 1.0) > 1e-12:
        u = u / n
    return np.array([[np.conj(u[0]), np.conj(u[1])], [-u[1], u[0]]], dtype=complex)


def random_directions(dim: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """count unit vectors of C^dim, Haar-uniform on the sphere of directions."""
    v = rng.standard_normal((count, dim)) + 1j * rng.standard_normal((count, dim))
    return v / np.linalg.norm(v, axis=1)[:, None]


def random_lines_through(point, count: int, rng: np.random.Generator):
    """Seeded random lines through ``point``; returns (lines, skipped).

    Directions are uniform on the complex projective space of directions.
    Lines missing the open ball or tangent to the sphere are skipped and
    counted.
    """
    point = as_point(point)
    lines = []
    skipped = 0
    for d in random_directions(point.size, count, rng):
        try:
            line = make_line(point, d)
            sphere_intersection(line)
        except (LineMissesBall, TangentLine):
            skipped += 1
            continue
        lines.append(line)
    return lines, skipped


def random_sphere_points(count: int, dim: int, rng: np.random.Generator, r1_max=None) -> np.ndarray:
    """Uniform points on the unit sphere of C^dim; optionally |z1| <= r1_max."""
    out = np.empty((count, dim), dtype=complex)
    filled = 0
    while filled < count:
        v = random_directions(dim, count - filled, rng)
        if r1_max is not None:
            v = v[np.abs(v[:, 0]) <= r1_max]
        out[filled : filled + v.shape[0]] = v
        filled += v.shape[0]
    return out
