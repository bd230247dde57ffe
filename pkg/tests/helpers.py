"""Shared test utilities: random inputs and independent oracles.

The oracles here deliberately avoid the library's own code paths:
``dft_coefficient`` is a direct quadrature sum (no FFT), ``kasa_circle_fit``
is an algebraic circle fit, and the random monomial builders construct
coefficients directly.
"""

import numpy as np

from holoball import MonomialSum


def random_holomorphic_monomial_sum(rng, degree=4, n=2):
    """Random holomorphic polynomial: one coefficient per |alpha| <= degree."""
    terms = []
    for alpha in _multi_indices(n, degree):
        c = rng.standard_normal() + 1j * rng.standard_normal()
        terms.append((c, alpha, (0,) * n))
    return MonomialSum(terms, n=n)


def random_monomial_sum(rng, degree=3, n=2, n_terms=6):
    """Random mixed monomial sum, conjugate exponents included."""
    indices = _multi_indices(n, degree)
    terms = []
    for _ in range(n_terms):
        alpha = indices[rng.integers(len(indices))]
        beta = indices[rng.integers(len(indices))]
        c = rng.standard_normal() + 1j * rng.standard_normal()
        terms.append((c, alpha, beta))
    return MonomialSum(terms, n=n)


def _multi_indices(n, degree):
    if n == 1:
        return [(d,) for d in range(degree + 1)]
    out = []
    for d in range(degree + 1):
        for rest in _multi_indices(n - 1, degree - d):
            out.append((d,) + rest)
    return out


def random_ball_point(rng, n=2, r_max=1.0):
    """Point of the closed ball: uniform direction, radius up to r_max."""
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    v /= np.linalg.norm(v)
    return v * (r_max * rng.random() ** (1.0 / (2 * n)))


def dft_coefficient(values, m):
    """Brute-force (1/N) sum v_k exp(-i m theta_k) over equispaced angles."""
    values = np.asarray(values, dtype=complex)
    n = values.size
    theta = 2.0 * np.pi * np.arange(n) / n
    return np.sum(values * np.exp(-1j * m * theta)) / n


def kasa_circle_fit(points):
    """Algebraic least-squares circle fit in the plane of complex numbers.

    Solves |w|^2 = 2 Re(conj(c) w) + (R^2 - |c|^2) linearly for the center c
    and radius R.
    """
    w = np.asarray(points, dtype=complex).ravel()
    design = np.stack([2.0 * w.real, 2.0 * w.imag, np.ones_like(w.real)], axis=1)
    rhs = np.abs(w) ** 2
    (cx, cy, d), *_ = np.linalg.lstsq(design, rhs, rcond=None)
    center = complex(cx, cy)
    radius = float(np.sqrt(d + abs(center) ** 2))
    return center, radius
