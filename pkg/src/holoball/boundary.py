"""Functions on the unit sphere of C^n and their constructors.

Three representations are supported:

* :class:`MonomialSum` -- finite sums  sum_k c_k z^alpha_k conj(z)^beta_k,
  an exact free algebra over IEEE double complex coefficients (no sphere
  relation |z|^2 = 1 is substituted; the spectral machinery handles that
  analytically).
* :class:`RationalSphereFunction` -- quotient of two monomial sums whose
  denominator stays away from zero on the evaluated points.
* :class:`SamplerFunction` -- black-box sampler with an advisory smoothness
  tag, for feeding adversarial or externally defined data into the tests.

All three are callable on arrays of shape (..., n) and return shape (...).
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "DenominatorVanishes",
    "MonomialSum",
    "RationalSphereFunction",
    "SamplerFunction",
    "monomial",
    "smoothness_of",
    "eval_on_sphere",
    "example_counterexample",
    "example_globevnik",
    "rotate_z2",
    "parse_monomial_text",
    "format_monomial_text",
]

SMOOTHNESS_TAGS = ("real-analytic", "finite-smoothness", "unknown")


class DenominatorVanishes(ValueError):
    """Rational evaluation hit the zero set of its denominator."""


def _as_multi_index(idx, n=None):
    idx = tuple(int(k) for k in idx)
    if any(k < 0 for k in idx):
        raise ValueError(f"multi-index entries must be nonnegative, got {idx}")
    if n is not None and len(idx) != n:
        raise ValueError(f"multi-index length {len(idx)} != dimension {n}")
    return idx


class MonomialSum:
    """f(z) = sum over terms of c * z^alpha * conj(z)^beta.

    Terms are kept canonical: one term per (alpha, beta) pair, exact-zero
    coefficients dropped, deterministic ordering.  Addition, subtraction,
    scalar and term-wise products are exact coefficient arithmetic, which
    makes the class usable as its own oracle in round-trip tests.
    """

    def __init__(self, terms, n=None):
        terms = list(terms)
        if n is None:
            if not terms:
                raise ValueError("dimension required for an empty monomial sum")
            n = len(terms[0][1])
        merged: dict[tuple, complex] = {}
        for c, alpha, beta in terms:
            alpha = _as_multi_index(alpha, n)
            beta = _as_multi_index(beta, n)
            key = (alpha, beta)
            merged[key] = merged.get(key, 0j) + complex(c)
        self.n = int(n)
        self.terms = tuple(
            (merged[key], key[0], key[1]) for key in sorted(merged) if merged[key] != 0
        )

    smoothness = "real-analytic"

    @classmethod
    def constant(cls, c, n=2):
        zero = (0,) * n
        return cls([(c, zero, zero)], n=n)

    @property
    def is_holomorphic(self) -> bool:
        return all(sum(beta) == 0 for _, _, beta in self.terms)

    @property
    def degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(a) + sum(b) for _, a, b in self.terms)

    def z2_frequencies(self):
        """Sorted angular frequencies alpha_n - beta_n present in the last variable."""
        return sorted({a[-1] - b[-1] for _, a, b in self.terms})

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        if z.shape[-1] != self.n:
            raise ValueError(f"expected points of C^{self.n}, got shape {z.shape}")
        out = np.zeros(z.shape[:-1], dtype=complex)
        zc = np.conj(z)
        for c, alpha, beta in self.terms:
            term = np.full(z.shape[:-1], c, dtype=complex)
            for j in range(self.n):
                if alpha[j]:
                    term = term * z[..., j] ** alpha[j]
                if beta[j]:
                    term = term * zc[..., j] ** beta[j]
            out += term
        return out

    def rotate_z2(self, phi: float) -> "MonomialSum":
        """Exact coefficient form of z -> f(z_1, ..., e^{i phi} z_n)."""
        return MonomialSum(
            [
                (c * np.exp(1j * phi * (alpha[-1] - beta[-1])), alpha, beta)
                for c, alpha, beta in self.terms
            ],
            n=self.n,
        )

    def __add__(self, other):
        if np.isscalar(other):
            other = MonomialSum.constant(other, n=self.n)
        if not isinstance(other, MonomialSum) or other.n != self.n:
            return NotImplemented
        return MonomialSum(list(self.terms) + list(other.terms), n=self.n)

    __radd__ = __add__

    def __neg__(self):
        return MonomialSum([(-c, a, b) for c, a, b in self.terms], n=self.n)

    def __sub__(self, other):
        return self + (-other if isinstance(other, MonomialSum) else -complex(other))

    def __mul__(self, other):
        if np.isscalar(other):
            return MonomialSum([(c * other, a, b) for c, a, b in self.terms], n=self.n)
        if not isinstance(other, MonomialSum) or other.n != self.n:
            return NotImplemented
        prod = []
        for c1, a1, b1 in self.terms:
            for c2, a2, b2 in other.terms:
                alpha = tuple(x + y for x, y in zip(a1, a2))
                beta = tuple(x + y for x, y in zip(b1, b2))
                prod.append((c1 * c2, alpha, beta))
        return MonomialSum(prod, n=self.n)

    __rmul__ = __mul__

    def __repr__(self):
        return f"MonomialSum(n={self.n}, terms={len(self.terms)})"


def monomial(c, alpha, beta=None) -> MonomialSum:
    """Single-term monomial sum c * z^alpha * conj(z)^beta."""
    alpha = tuple(alpha)
    if beta is None:
        beta = (0,) * len(alpha)
    return MonomialSum([(c, alpha, beta)], n=len(alpha))


class RationalSphereFunction:
    """Quotient of monomial sums, defined where the denominator is nonzero.

    Evaluation raises :class:`DenominatorVanishes` when any requested point
    has |denominator| < 1e-9.
    """

    MIN_DENOMINATOR = 1e-9

    def __init__(self, numerator: MonomialSum, denominator: MonomialSum, smoothness="unknown"):
        if numerator.n != denominator.n:
            raise ValueError("numerator and denominator dimensions differ")
        if smoothness not in SMOOTHNESS_TAGS:
            raise ValueError(f"unknown smoothness tag {smoothness!r}")
        self.numerator = numerator
        self.denominator = denominator
        self.n = numerator.n
        self.smoothness = smoothness

    def __call__(self, z):
        den = self.denominator(z)
        small = np.abs(den) < self.MIN_DENOMINATOR
        if np.any(small):
            raise DenominatorVanishes(
                f"|denominator| < {self.MIN_DENOMINATOR:g} at {int(np.sum(small))} point(s)"
            )
        return self.numerator(z) / den

    def __repr__(self):
        return f"RationalSphereFunction(n={self.n}, smoothness={self.smoothness!r})"


class SamplerFunction:
    """Black-box sphere sampler with an advisory smoothness tag.

    ``func`` receives complex arrays of shape (..., n) when ``vectorized``
    (the default) and single points of shape (n,) otherwise.
    """

    def __init__(self, func, n=2, smoothness="unknown", vectorized=True):
        if smoothness not in SMOOTHNESS_TAGS:
            raise ValueError(f"unknown smoothness tag {smoothness!r}")
        self.func = func
        self.n = int(n)
        self.smoothness = smoothness
        self.vectorized = bool(vectorized)

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        if z.shape[-1] != self.n:
            raise ValueError(f"expected points of C^{self.n}, got shape {z.shape}")
        if self.vectorized:
            return np.asarray(self.func(z), dtype=complex)
        flat = z.reshape(-1, self.n)
        vals = np.array([self.func(p) for p in flat], dtype=complex)
        return vals.reshape(z.shape[:-1])

    def __repr__(self):
        return f"SamplerFunction(n={self.n}, smoothness={self.smoothness!r})"


def smoothness_of(f) -> str:
    return getattr(f, "smoothness", "unknown")


def eval_on_sphere(f, z, tol=1e-10):
    """Evaluate a boundary function at sphere points, validating |z| = 1.

    Raises ``ValueError`` when any point is farther than ``tol`` from the
    unit sphere; rational denominators raise :class:`DenominatorVanishes`.
    """
    z = np.asarray(z, dtype=complex)
    drift = np.max(np.abs(np.linalg.norm(z, axis=-1) - 1.0))
    if drift > tol:
        raise ValueError(f"point off the unit sphere by {drift:.3g} (tol {tol:g})")
    return f(z)


def example_counterexample() -> MonomialSum:
    """|z1|^2: constant on every circle cut by a complex line through 0,
    hence extendible along the whole bunch at the origin, yet not the
    boundary value of any holomorphic function (it is real and non-constant).
    """
    return monomial(1.0, (1, 0), (1, 0))


def example_globevnik(k: int) -> RationalSphereFunction:
    """z2^k / conj(z2) on the sphere of C^2 (k >= 1).

    On the sphere this equals r^{k-1} e^{i (k+1) psi} with z2 = r e^{i psi},
    i.e. z2^{k+1} / (1 - |z1|^2): it extends holomorphically along every
    complex line meeting {z2 = 0} inside the ball, but has only a finite
    order of smoothness at |z1| = 1.
    """
    k = int(k)
    if k < 1:
        raise ValueError(f"order must be >= 1, got {k}")
    return RationalSphereFunction(
        numerator=monomial(1.0, (0, k)),
        denominator=monomial(1.0, (0, 0), (0, 1)),
        smoothness="finite-smoothness",
    )


def rotate_z2(f, phi: float):
    """Pullback of f under the rotation z -> (z_1, ..., e^{i phi} z_n).

    Exact coefficient arithmetic for monomial sums and their quotients;
    pointwise composition for black-box samplers.
    """
    phi = float(phi)
    if isinstance(f, MonomialSum):
        return f.rotate_z2(phi)
    if isinstance(f, RationalSphereFunction):
        return RationalSphereFunction(
            f.numerator.rotate_z2(phi), f.denominator.rotate_z2(phi), smoothness=f.smoothness
        )
    n = getattr(f, "n", 2)

    def rotated(z):
        w = np.array(z, dtype=complex, copy=True)
        w[..., -1] = w[..., -1] * np.exp(1j * phi)
        return f(w)

    return SamplerFunction(rotated, n=n, smoothness=smoothness_of(f), vectorized=True)


def parse_monomial_text(text: str, n=None) -> MonomialSum:
    """Parse the line format ``c_re c_im | a_1 ... a_n | b_1 ... b_n``.

    Blank lines and lines starting with ``#`` are ignored.  The dimension is
    inferred from the first term unless given.
    """
    terms = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split("|")]
        if len(parts) != 3:
            raise ValueError(f"line {lineno}: expected 'c_re c_im | alpha | beta', got {raw!r}")
        try:
            cre, cim = (float(x) for x in parts[0].split())
            alpha = tuple(int(x) for x in parts[1].split())
            beta = tuple(int(x) for x in parts[2].split())
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from exc
        if len(alpha) != len(beta):
            raise ValueError(f"line {lineno}: alpha and beta lengths differ")
        if n is None:
            n = len(alpha)
        terms.append((complex(cre, cim), alpha, beta))
    if not terms:
        raise ValueError("no monomial terms found")
    return MonomialSum(terms, n=n)


def format_monomial_text(f: MonomialSum) -> str:
    """Inverse of :func:`parse_monomial_text` for canonical monomial sums."""
    lines = []
    for c, alpha, beta in f.terms:
        a = " ".join(str(k) for k in alpha)
        b = " ".join(str(k) for k in beta)
        lines.append(f"{c.real!r} {c.imag!r} | {a} | {b}")
    return "\n".join(lines) + "\n"
