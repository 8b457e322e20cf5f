"""Generalized (monopole) spherical harmonics.

The harmonics Y_{j m mu} describe a charged particle on the sphere around a
magnetic pole with mu = eg the charge-monopole product.  They are assembled
from Jacobi polynomials with parameters (-m-mu, -m+mu), half-integer powers
of (1 -/+ cos theta) and the azimuthal factor e^{i(m+mu)phi}.  For mu = 0
they reduce to the standard spherical harmonics with the Condon-Shortley
sign.  The index invariants force m+mu and m-mu to integers, so the Jacobi
parameters are integers and the azimuthal winding number is an integer.

Negative Jacobi parameters put a structural root of the polynomial at the
matching endpoint, which cancels the negative powers of (1 -/+ x); the
harmonics stay bounded on the open sphere even though each factor alone
blows up at a pole.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError
from .exact_algebra import HalfInt, as_half_int, factorial, generalized_binomial

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class MonopoleHarmonicIndex:
    """Validated (j, m, mu) triple indexing a monopole harmonic."""

    j: HalfInt
    m: HalfInt
    mu: HalfInt

    def __post_init__(self) -> None:
        tj, tm, tmu = self.j.twice_value, self.m.twice_value, self.mu.twice_value
        if tj < abs(tmu):
            raise DomainError(f"j must be at least |mu|: j={self.j}, mu={self.mu}")
        if abs(tm) > tj:
            raise DomainError(f"|m| exceeds j: m={self.m}, j={self.j}")
        if (tj - tm) % 2 != 0:
            raise DomainError(f"j - m must be an integer: j={self.j}, m={self.m}")
        if (tj - tmu) % 2 != 0:
            raise DomainError(f"j - mu must be an integer: j={self.j}, mu={self.mu}")

    @classmethod
    def of(cls, j, m, mu) -> "MonopoleHarmonicIndex":
        return cls(as_half_int(j), as_half_int(m), as_half_int(mu))

    def with_mu_negated(self) -> "MonopoleHarmonicIndex":
        return MonopoleHarmonicIndex(self.j, self.m, -self.mu)


@dataclass(frozen=True)
class SphericalPoint:
    """A point (theta, phi) on the unit sphere, strictly off the poles.

    The poles are excluded because the Dirac string and the half-integer
    powers of (1 -/+ cos theta) are singular there.
    """

    theta: float
    phi: float

    def __post_init__(self) -> None:
        if not (0.0 < self.theta < math.pi):
            raise DomainError(f"theta must lie strictly inside (0, pi), got {self.theta}")
        if not math.isfinite(self.phi):
            raise DomainError(f"phi must be finite, got {self.phi}")

    def reflected(self) -> "SphericalPoint":
        """The antipodal image: theta -> pi - theta, phi -> phi + pi (mod 2 pi)."""
        return SphericalPoint(math.pi - self.theta, (self.phi + math.pi) % TWO_PI)

    def unit_vector(self) -> np.ndarray:
        st = math.sin(self.theta)
        return np.array([st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)])


def jacobi_polynomial(n: int, alpha: "Fraction | int", beta: "Fraction | int",
                      x: float) -> float:
    """Degree-n Jacobi polynomial by the finite hypergeometric sum.

    P_n^(alpha,beta)(x) = sum_s C(n+alpha, n-s) C(n+beta, s)
                          ((x-1)/2)^s ((x+1)/2)^(n-s)

    with generalized binomials, so alpha and beta may be negative and
    non-integer.  The summation order is fixed (s ascending) and the
    coefficient arithmetic exact, so values are bit-identical across runs.
    For alpha = -k a negative integer the first k coefficients vanish
    identically, leaving a structural root at x = 1 with no cancellation.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DomainError(f"polynomial degree must be a non-negative integer, got {n!r}")
    alpha = Fraction(alpha)
    beta = Fraction(beta)
    u = (x - 1.0) / 2.0
    v = (x + 1.0) / 2.0
    total = 0.0
    for s in range(n + 1):
        coeff = generalized_binomial(alpha + n, n - s) * generalized_binomial(beta + n, s)
        if coeff != 0:
            total += float(coeff) * u**s * v**(n - s)
    return total


def _index_integers(idx: MonopoleHarmonicIndex) -> tuple[int, int, int, int]:
    """(j+m, j-m, m+mu, m-mu) as plain ints; all are integers by the invariants."""
    tj, tm, tmu = idx.j.twice_value, idx.m.twice_value, idx.mu.twice_value
    return (tj + tm) // 2, (tj - tm) // 2, (tm + tmu) // 2, (tm - tmu) // 2


def normalization_constant(idx: MonopoleHarmonicIndex) -> float:
    """The normalization N = 2^m sqrt((2j+1)(j-m)!(j+m)! / (4 pi (j-mu)!(j+mu)!)).

    The factorial ratio is exact before the final square root; 2^m uses the
    real power since m may be a half-integer.  This N makes the harmonics
    unit-normalized, as the quadrature tests confirm.
    """
    tj, tmu = idx.j.twice_value, idx.mu.twice_value
    jpm, jmm, _, _ = _index_integers(idx)
    jpmu = (tj + tmu) // 2
    jmmu = (tj - tmu) // 2
    ratio = Fraction((tj + 1) * factorial(jmm) * factorial(jpm),
                     factorial(jmmu) * factorial(jpmu))
    return 2.0 ** float(idx.m) * math.sqrt(float(ratio) / (4.0 * math.pi))


def monopole_harmonic(idx: MonopoleHarmonicIndex, p: SphericalPoint) -> complex:
    """Y_{j m mu}(theta, phi) at one interior point.

    Assembled literally as
    N (1-x)^(-(m+mu)/2) (1+x)^(-(m-mu)/2) P_{j+m}^(-m-mu, -m+mu)(x) e^{i(m+mu)phi}
    with x = cos theta.  The azimuthal exponent multiplies phi; m+mu is an
    integer for every valid index, so the value is single-valued on the
    sphere.
    """
    jpm, _, mpmu, mmmu = _index_integers(idx)
    x = math.cos(p.theta)
    # negative half-integer powers via exp(log) on the open interval
    radial = math.exp(-0.5 * (mpmu * math.log1p(-x) + mmmu * math.log1p(x)))
    poly = jacobi_polynomial(jpm, Fraction(-mpmu), Fraction(-mmmu), x)
    return (normalization_constant(idx) * radial * poly
            * cmath.exp(1j * mpmu * p.phi))


def monopole_harmonic_grid(idx: MonopoleHarmonicIndex, theta: np.ndarray,
                           phi: np.ndarray) -> np.ndarray:
    """Vectorized evaluation on a product grid, shape (len(theta), len(phi)).

    The harmonic is separable: a real profile in theta times a unit phase in
    phi, so the grid is an outer product.
    """
    jpm, _, mpmu, mmmu = _index_integers(idx)
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    if np.any(theta <= 0.0) or np.any(theta >= math.pi):
        raise DomainError("theta nodes must lie strictly inside (0, pi)")
    x = np.cos(theta)
    radial = np.exp(-0.5 * (mpmu * np.log1p(-x) + mmmu * np.log1p(x)))
    coeffs = _jacobi_coefficients(jpm, Fraction(-mpmu), Fraction(-mmmu))
    u = (x - 1.0) / 2.0
    v = (x + 1.0) / 2.0
    poly = np.zeros_like(x)
    for s, c in enumerate(coeffs):
        if c != 0.0:
            poly += c * u**s * v**(jpm - s)
    profile = normalization_constant(idx) * radial * poly
    phase = np.exp(1j * mpmu * phi)
    return np.outer(profile, phase)


def _jacobi_coefficients(n: int, alpha: Fraction, beta: Fraction) -> list[float]:
    """Hypergeometric-sum coefficients C(n+alpha, n-s) C(n+beta, s) as floats."""
    return [float(generalized_binomial(alpha + n, n - s) * generalized_binomial(beta + n, s))
            for s in range(n + 1)]


@dataclass(frozen=True)
class GramReport:
    """Quadrature Gram matrix of all harmonics with one mu and j <= j_max."""

    mu: HalfInt
    j_max: HalfInt
    n_theta: int
    n_phi: int
    dimension: int
    max_off_diagonal: float
    diagonal_mean: float
    diagonal_spread: float        # max - min of the real diagonal


def harmonic_gram(mu, j_max, grid) -> GramReport:
    """Integrate all pairwise overlaps <Y_{j'm'mu}, Y_{jmmu}> on the grid.

    Orthonormality shows up as an identity Gram matrix; the diagonal mean
    doubles as a measurement of the normalization constant's square.
    """
    from .sphere_quadrature import grid_weights

    mu = as_half_int(mu)
    j_max = as_half_int(j_max)
    lowest = abs(mu.twice_value)
    if j_max.twice_value < lowest:
        raise DomainError(f"j_max must be at least |mu|: j_max={j_max}, mu={mu}")
    indices = [
        MonopoleHarmonicIndex(HalfInt(tj), HalfInt(tm), mu)
        for tj in range(lowest, j_max.twice_value + 1, 2)
        for tm in range(-tj, tj + 1, 2)
    ]
    theta = np.arccos(np.clip(grid.x_nodes, -1.0, 1.0))
    stack = np.stack([monopole_harmonic_grid(idx, theta, grid.phi_nodes)
                      for idx in indices])
    weighted = stack * grid_weights(grid)[None, :, :]
    gram = np.einsum("iab,kab->ik", np.conj(stack), weighted)
    off = gram - np.diag(np.diag(gram))
    diagonal = np.real(np.diag(gram))
    return GramReport(
        mu=mu, j_max=j_max, n_theta=grid.n_theta, n_phi=grid.n_phi,
        dimension=len(indices),
        max_off_diagonal=float(np.max(np.abs(off))) if len(indices) > 1 else 0.0,
        diagonal_mean=float(np.mean(diagonal)),
        diagonal_spread=float(np.max(diagonal) - np.min(diagonal)),
    )


def parity_map(idx: MonopoleHarmonicIndex, p: SphericalPoint
               ) -> tuple[MonopoleHarmonicIndex, SphericalPoint, complex]:
    """Parity partner data: mu-negated index, reflected point, and the phase.

    Spatial reflection sends Y_{j m mu} to Y_{j m -mu} at the reflected
    point, but only after the accompanying azimuthal gauge rotation: the
    raw ratio Y_{j m -mu}(reflected)/Y_{j m mu}(p) carries a residual gauge
    factor e^{-2 i mu phi} and is not a constant for mu != 0.  The returned
    phase is the gauge-accompanied ratio

        e^{+2 i mu phi} * Y_{j m -mu}(reflected) / Y_{j m mu}(p),

    a position-independent sign (-1)^(j - mu + 2m).  Since (-1)^(2m) is
    fixed by j, the sign depends only on (j, mu); for mu = 0 it is the
    familiar (-1)^j.  The sign is returned in exact form so that points
    where the harmonic itself vanishes are no obstacle; the quadrature
    tests confirm it against the ratio at generic points.
    """
    tj, tm, tmu = idx.j.twice_value, idx.m.twice_value, idx.mu.twice_value
    exponent = (tj - tmu) // 2 + tm
    phase = complex(-1.0 if exponent % 2 else 1.0)
    return idx.with_mu_negated(), p.reflected(), phase
