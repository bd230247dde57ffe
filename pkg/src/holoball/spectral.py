"""Angular Fourier slices of sphere functions in the last-variable phase.

Writing points of the unit sphere of C^2 as (z1, r e^{i psi}) with
r = sqrt(1 - |z1|^2), a function f on the sphere expands as

    f(z1, z2) = sum_nu  A_nu(z1) e^{i nu psi}
              = sum_nu  F_nu(z1) z2^nu,      F_nu = A_nu / (1 - |z1|^2)^{nu/2}.

``fourier_slice`` computes A_nu by trapezoidal (equispaced) quadrature of

    A_nu(z1) e^{i nu psi} = (1/2 pi) integral f(z1, e^{i phi} z2) e^{-i nu phi} dphi,

which is spectrally exact for band-limited inputs once the quadrature size
exceeds the angular bandwidth.  ``normalized_slice`` applies the
(1 - |z1|^2)^{-nu/2} normalization that turns the coefficients into
functions of z1 alone; membership of f in the ball algebra is equivalent to
every F_nu with nu >= 0 being holomorphic and every F_nu with nu < 0
vanishing, which is what the extension tests downstream check.

Defaults: quadrature size 512 and radial range capped at r_max = 0.95,
keeping (1 - |z1|^2)^{-nu/2} bounded on the grid.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "BandwidthTooSmall",
    "SliceIsZero",
    "FourierSlice",
    "VanishingOrderEstimate",
    "R_MAX",
    "DEFAULT_N_PHI",
    "DEFAULT_V_MAX",
    "default_radii",
    "angular_table",
    "fourier_slice",
    "normalized_slice",
    "slice_values",
    "build_slice",
    "build_slices",
    "vanishing_order",
    "slices_to_csv",
]

R_MAX = 0.95
DEFAULT_N_PHI = 512
DEFAULT_V_MAX = 12


class BandwidthTooSmall(ValueError):
    """Quadrature size below the 4 (|nu| + 1) floor for the requested slice."""


class SliceIsZero(ValueError):
    """The slice vanishes to working precision; its boundary order is undefined."""


def default_radii(count: int = 10, r_max: float = R_MAX) -> np.ndarray:
    """Radial grid for slice sampling.

    The lower end stays at 0.5 so that dividing circle coefficients by
    r^mu never amplifies quadrature roundoff past the test tolerances.
    """
    return np.linspace(0.5, r_max, count)


def _check_n_phi(n_phi: int, nu: int = 0):
    if n_phi < 4 or (n_phi & (n_phi - 1)) != 0:
        raise BandwidthTooSmall(f"quadrature size must be a power of two >= 4, got {n_phi}")
    if n_phi < 4 * (abs(int(nu)) + 1):
        raise BandwidthTooSmall(
            f"quadrature size {n_phi} < 4 (|nu| + 1) = {4 * (abs(int(nu)) + 1)}"
        )


def angular_table(f, z1, n_phi: int = DEFAULT_N_PHI):
    """Full DFT table of phi -> f(z1, e^{i phi} sqrt(1 - |z1|^2)).

    Returns ``(coeffs, scale)`` where ``coeffs[..., m]`` is the coefficient
    at frequency m (frequency nu lives at index nu mod n_phi) and ``scale``
    is max |f| over the sampled sphere cloud.  One call serves every nu at
    once, which is what the classification pipeline relies on.
    """
    _check_n_phi(n_phi)
    z1 = np.asarray(z1, dtype=complex)
    r1 = np.abs(z1)
    if np.any(r1 >= 1.0):
        raise ValueError("slice evaluation requires |z1| < 1")
    r2 = np.sqrt(1.0 - r1**2)
    phi = 2.0 * np.pi * np.arange(n_phi) / n_phi
    pts = np.empty(z1.shape + (n_phi, 2), dtype=complex)
    pts[..., 0] = z1[..., None]
    pts[..., 1] = r2[..., None] * np.exp(1j * phi)
    vals = np.asarray(f(pts), dtype=complex)
    coeffs = np.fft.fft(vals, axis=-1) / n_phi
    return coeffs, float(np.max(np.abs(vals))) if vals.size else 0.0


def fourier_slice(f, nu: int, z1, n_phi: int = DEFAULT_N_PHI):
    """Angular coefficient A_nu(z1); scalar in, scalar out."""
    _check_n_phi(n_phi, nu)
    scalar = np.isscalar(z1) or np.asarray(z1).ndim == 0
    coeffs, _ = angular_table(f, np.atleast_1d(np.asarray(z1, dtype=complex)), n_phi)
    a = coeffs[..., int(nu) % n_phi]
    return complex(a[0]) if scalar else a


def normalized_slice(f, nu: int, z1, n_phi: int = DEFAULT_N_PHI):
    """F_nu(z1) = A_nu(z1) * (1 - |z1|^2)^(-nu/2)."""
    z1_arr = np.atleast_1d(np.asarray(z1, dtype=complex))
    a = fourier_slice(f, nu, z1_arr, n_phi)
    q = 1.0 - np.abs(z1_arr) ** 2
    out = a * q ** (-nu / 2.0)
    scalar = np.isscalar(z1) or np.asarray(z1).ndim == 0
    return complex(out[0]) if scalar else out


def slice_values(f, nus, z1, n_phi: int = DEFAULT_N_PHI):
    """A_nu and F_nu for several nu at arbitrary disc points, one quadrature.

    Returns ``(raw, normalized, scale)`` with arrays of shape
    (len(nus), len(z1)); ``scale`` is max |f| over the sampled sphere cloud.
    """
    nus = [int(v) for v in nus]
    for nu in nus:
        _check_n_phi(n_phi, nu)
    z1 = np.asarray(z1, dtype=complex).ravel()
    coeffs, scale = angular_table(f, z1, n_phi)
    q = 1.0 - np.abs(z1) ** 2
    raw = np.empty((len(nus), z1.size), dtype=complex)
    normalized = np.empty_like(raw)
    for i, nu in enumerate(nus):
        raw[i] = coeffs[:, nu % n_phi]
        normalized[i] = raw[i] * q ** (-nu / 2.0)
    return raw, normalized, scale


@dataclass(frozen=True)
class FourierSlice:
    """A_nu and F_nu sampled on a polar grid of the unit disc.

    ``raw[i, j]`` and ``normalized[i, j]`` hold A_nu and F_nu at
    z1 = radii[i] * exp(1j * angles[j]); ``normalized = raw * (1 - r^2)^(-nu/2)``
    node-wise by construction.  ``psi_spread`` is a consistency diagnostic:
    the spread of the nu-th coefficient when the angular quadrature is
    started from several phase offsets (it must be offset-independent).
    """

    nu: int
    radii: np.ndarray
    angles: np.ndarray
    raw: np.ndarray
    normalized: np.ndarray
    n_phi: int
    psi_spread: float | None = None

    @property
    def scale(self) -> float:
        return float(np.max(np.abs(self.normalized))) if self.normalized.size else 0.0

    def grid(self) -> np.ndarray:
        return self.radii[:, None] * np.exp(1j * self.angles[None, :])


def _psi_consistency(f, nu: int, z1: complex, n_phi: int, offsets=(0.0, 0.7, 1.9)) -> float:
    """Spread of A_nu(z1) across quadrature phase offsets."""
    r2 = np.sqrt(1.0 - abs(z1) ** 2)
    vals = []
    for psi in offsets:
        phi = 2.0 * np.pi * np.arange(n_phi) / n_phi
        pts = np.stack(
            [np.full(n_phi, z1, dtype=complex), r2 * np.exp(1j * (phi + psi))], axis=-1
        )
        g = np.asarray(f(pts), dtype=complex)
        vals.append(np.exp(-1j * nu * psi) * np.mean(g * np.exp(-1j * nu * phi)))
    vals = np.asarray(vals)
    return float(np.max(np.abs(vals - vals.mean())))


def build_slice(
    f,
    nu: int,
    radii=None,
    n_angles: int = 64,
    n_phi: int = DEFAULT_N_PHI,
    psi_check: bool = True,
) -> FourierSlice:
    """Populate a :class:`FourierSlice` on a polar grid."""
    _check_n_phi(n_phi, nu)
    radii = default_radii() if radii is None else np.asarray(radii, dtype=float)
    if np.any(radii <= 0.0) or np.any(radii >= 1.0):
        raise ValueError("radial nodes must lie in (0, 1)")
    angles = 2.0 * np.pi * np.arange(n_angles) / n_angles
    z1 = radii[:, None] * np.exp(1j * angles[None, :])
    coeffs, _ = angular_table(f, z1, n_phi)
    raw = coeffs[..., int(nu) % n_phi]
    normalized = raw * (1.0 - radii[:, None] ** 2) ** (-nu / 2.0)
    spread = None
    if psi_check:
        spread = _psi_consistency(f, nu, complex(radii[-1]), n_phi)
    return FourierSlice(
        nu=int(nu),
        radii=radii,
        angles=angles,
        raw=raw,
        normalized=normalized,
        n_phi=n_phi,
        psi_spread=spread,
    )


def build_slices(f, nus, radii=None, n_angles: int = 64, n_phi: int = DEFAULT_N_PHI):
    """Slices for several nu from a single quadrature pass; returns (slices, scale)."""
    radii = default_radii() if radii is None else np.asarray(radii, dtype=float)
    angles = 2.0 * np.pi * np.arange(n_angles) / n_angles
    z1 = (radii[:, None] * np.exp(1j * angles[None, :])).ravel()
    raw, normalized, scale = slice_values(f, nus, z1, n_phi)
    shape = (len(radii), n_angles)
    slices = [
        FourierSlice(
            nu=int(nu),
            radii=radii,
            angles=angles,
            raw=raw[i].reshape(shape),
            normalized=normalized[i].reshape(shape),
            n_phi=n_phi,
        )
        for i, nu in enumerate(nus)
    ]
    return slices, scale


@dataclass(frozen=True)
class VanishingOrderEstimate:
    """Boundary vanishing order of a slice: F_nu(z1) ~ (1 - |z1|^2)^k.

    ``exponent`` is the raw two-radius log-ratio fit, ``order`` its nearest
    integer and ``residual`` the rounding gap.  For sources that are
    real-analytic up to the boundary the order is >= 0, and >= 1 whenever
    nu < 0; a negative fitted exponent signals boundary growth, i.e. only a
    finite order of smoothness.
    """

    nu: int
    order: int
    exponent: float
    residual: float


def vanishing_order(
    f,
    nu: int,
    r_a: float = 0.90,
    r_b: float = R_MAX,
    n_angles: int = 64,
    n_phi: int = DEFAULT_N_PHI,
) -> VanishingOrderEstimate:
    """Two-radius log-ratio estimate of the boundary order of F_nu.

    Compares max-over-angle |F_nu| at r_a < r_b against (1 - r^2).  Boundary
    evaluation itself is not available (F_nu is not defined at |z1| = 1 for
    nu > 0), hence the interior fit.
    """
    if not 0.0 < r_a < r_b < 1.0:
        raise ValueError("radii must satisfy 0 < r_a < r_b < 1")
    _check_n_phi(n_phi, nu)
    angles = np.exp(2j * np.pi * np.arange(n_angles) / n_angles)
    _, f_a, _ = slice_values(f, [nu], r_a * angles, n_phi)
    _, f_b, _ = slice_values(f, [nu], r_b * angles, n_phi)
    g_a = float(np.max(np.abs(f_a)))
    g_b = float(np.max(np.abs(f_b)))
    if max(g_a, g_b) < 1e-12:
        raise SliceIsZero(f"slice nu={nu} below 1e-12 everywhere; order undefined")
    exponent = float(np.log(g_a / g_b) / np.log((1.0 - r_a**2) / (1.0 - r_b**2)))
    order = int(round(exponent))
    return VanishingOrderEstimate(
        nu=int(nu), order=order, exponent=exponent, residual=abs(exponent - order)
    )


def slices_to_csv(slices, file) -> None:
    """Write slices as CSV rows ``nu, r, t, re_A, im_A, re_F, im_F``."""
    close = False
    if isinstance(file, (str, bytes)):
        file = open(file, "w", encoding="utf-8")
        close = True
    try:
        file.write("nu,r,t,re_A,im_A,re_F,im_F\n")
        for s in slices:
            for i, r in enumerate(s.radii):
                for j, t in enumerate(s.angles):
                    a = s.raw[i, j]
                    fn = s.normalized[i, j]
                    file.write(
                        f"{s.nu},{r!r},{t!r},{a.real!r},{a.imag!r},{fn.real!r},{fn.imag!r}\n"
                    )
    finally:
        if close:
            file.close()
