"""Gauge geometry of the charge-monopole system.

The non-abelian hedgehog configuration A_k^a = eps_{akm} r_m / r^2 can be
rotated by a position-dependent SU(2) matrix into an abelian string
potential times sigma_3.  This module carries the hedgehog and string
potentials, the rotation matrices S and S_p (the latter built at the
antipodal point), the azimuthal matrix R = S_p S^{-1} that turns ordinary
parity into a symmetry of the abelianized problem, and numeric checks that
the advertised identities hold pointwise.

Conventions fixed here and relied on throughout:

  * the string of the abelian potential points along -z (theta = pi), so
    comparisons use dirac_potential(r, STRING_AXIS);
  * the rotation that diagonalizes sigma . rhat is the adjoint action
    S^dag (sigma . rhat) S = sigma_3 with the S below;
  * the abelianizing combination is the gauge transform of the hedgehog by
    the adjoint field S^dag at coupling e = -1, i.e.
    M_k = S^dag A_k S - i (grad_k S^dag) S.

On the unit sphere M_k = -(1/2) tan(theta/2) phihat_k sigma_3 exactly,
which is -(1/2) times the string potential with string along -z; the
parity variant built from S_p lands on +(1/2) times the string potential
evaluated at the antipodal point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Protocol

import numpy as np

from .errors import DomainError, SingularityError
from .monopole_harmonics import SphericalPoint
from .sampling import sample_sphere_points

# Type aliases used in signatures. A Vector3 is a real array of shape (3,);
# an SU2Matrix is a complex array of shape (2, 2) with U^dag U = 1, det U = 1.
Vector3 = np.ndarray
SU2Matrix = np.ndarray

PAULI = (
    np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
)
IDENTITY2 = np.eye(2, dtype=complex)

# string direction of the abelian potential: -z
STRING_AXIS = np.array([0.0, 0.0, -1.0])

# how su(2)-valued components are packed: A_k = A_k^a * sigma_a / 2
GENERATOR_CONVENTION = "sigma_a/2"

# half-angle of the cone around the string inside which evaluation refuses
STRING_CONE_HALF_ANGLE = 1e-6

_EPSILON = np.zeros((3, 3, 3))
for _a, _b, _c in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
    _EPSILON[_a, _b, _c] = 1.0
    _EPSILON[_a, _c, _b] = -1.0


def as_vector3(v) -> Vector3:
    arr = np.asarray(v, dtype=float)
    if arr.shape != (3,):
        raise DomainError(f"expected a 3-vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise DomainError("vector components must be finite")
    return arr


def wu_yang_potential(r: Vector3) -> np.ndarray:
    """Hedgehog potential as matrices: A_k = eps_{akm} r_m / r^2 sigma_a / 2.

    Returns shape (3, 2, 2) with the spatial index first.
    """
    r = as_vector3(r)
    r2 = float(r @ r)
    if r2 == 0.0:
        raise SingularityError("hedgehog potential undefined at the origin")
    A = np.zeros((3, 2, 2), dtype=complex)
    for k in range(3):
        for a in range(3):
            coeff = float(_EPSILON[a, k] @ r) / r2
            if coeff != 0.0:
                A[k] += coeff * PAULI[a] / 2.0
    return A


def dirac_potential(r: Vector3, n: Vector3) -> np.ndarray:
    """String potential A_a = eps_{abc} r_b n_c / (|r| - r . n), string along +n.

    n is normalized to a unit vector.  Directions within
    STRING_CONE_HALF_ANGLE of +n raise SingularityError; at r
    antiparallel to n the numerator vanishes and the value is exactly 0.
    """
    r = as_vector3(r)
    n = as_vector3(n)
    rho = float(np.linalg.norm(r))
    n_norm = float(np.linalg.norm(n))
    if rho == 0.0:
        raise SingularityError("string potential undefined at the origin")
    if n_norm == 0.0:
        raise DomainError("string direction must be a nonzero vector")
    n = n / n_norm
    cos_angle = float(r @ n) / rho
    if cos_angle >= math.cos(STRING_CONE_HALF_ANGLE):
        raise SingularityError(
            f"point within {STRING_CONE_HALF_ANGLE:g} rad of the string direction")
    if cos_angle <= -1.0 + 1e-15:
        return np.zeros(3)
    return np.cross(r, n) / (rho - float(r @ n))


def gauge_matrix_S(p: SphericalPoint) -> SU2Matrix:
    """The SU(2) rotation with S^dag (sigma . rhat) S = sigma_3.

    S = [[cos(theta/2), -sin(theta/2) e^{-i phi}],
         [sin(theta/2) e^{i phi},  cos(theta/2)]]
    """
    c = math.cos(p.theta / 2.0)
    s = math.sin(p.theta / 2.0)
    ep = complex(math.cos(p.phi), math.sin(p.phi))
    return np.array([[c, -s * ep.conjugate()], [s * ep, c]], dtype=complex)


def gauge_matrix_Sp(p: SphericalPoint) -> SU2Matrix:
    """The rotation S taken at the antipodal point: S_p(theta, phi) = S(pi - theta, phi + pi)."""
    c = math.cos(p.theta / 2.0)
    s = math.sin(p.theta / 2.0)
    ep = complex(math.cos(p.phi), math.sin(p.phi))
    return np.array([[s, c * ep.conjugate()], [-c * ep, s]], dtype=complex)


def r_matrix(phi: float) -> SU2Matrix:
    """R(phi) = S_p S^{-1} = [[0, e^{-i phi}], [-e^{i phi}, 0]].

    Theta-independent; R^2 = -1 and R^dag = -R, so R^{-1} = -R = R(phi + pi).
    """
    ep = complex(math.cos(phi), math.sin(phi))
    return np.array([[0.0, ep.conjugate()], [-ep, 0.0]], dtype=complex)


def r_hat_matrix(phi: float, mu) -> SU2Matrix:
    """The charge-mu azimuthal matrix [[0, e^{-2 i mu phi}], [-e^{2 i mu phi}, 0]].

    Reduces to r_matrix for mu = 1/2.
    """
    ep = complex(math.cos(2.0 * float(mu) * phi), math.sin(2.0 * float(mu) * phi))
    return np.array([[0.0, ep.conjugate()], [-ep, 0.0]], dtype=complex)


class GaugeField(Protocol):
    """A matrix field on the sphere with Cartesian angular gradients."""

    def value(self, p: SphericalPoint) -> SU2Matrix: ...

    def gradient(self, p: SphericalPoint) -> np.ndarray: ...


def _angular_frame(p: SphericalPoint) -> tuple[np.ndarray, np.ndarray, float]:
    """(theta-hat, phi-hat, sin theta) at p."""
    st, ct = math.sin(p.theta), math.cos(p.theta)
    sp, cp = math.sin(p.phi), math.cos(p.phi)
    theta_hat = np.array([ct * cp, ct * sp, -st])
    phi_hat = np.array([-sp, cp, 0.0])
    return theta_hat, phi_hat, st


def _cartesian_gradient(p: SphericalPoint, d_theta: np.ndarray,
                        d_phi: np.ndarray) -> np.ndarray:
    """Lift angular derivatives to Cartesian ones on the unit sphere.

    grad_k = thetahat_k d_theta + phihat_k d_phi / sin(theta); no radial
    term since the fields depend on angles only.
    """
    theta_hat, phi_hat, st = _angular_frame(p)
    grad = np.empty((3, 2, 2), dtype=complex)
    for k in range(3):
        grad[k] = theta_hat[k] * d_theta + (phi_hat[k] / st) * d_phi
    return grad


class HedgehogField:
    """The field p -> S(p), with analytic gradients."""

    def value(self, p: SphericalPoint) -> SU2Matrix:
        return gauge_matrix_S(p)

    def gradient(self, p: SphericalPoint) -> np.ndarray:
        c = math.cos(p.theta / 2.0)
        s = math.sin(p.theta / 2.0)
        ep = complex(math.cos(p.phi), math.sin(p.phi))
        em = ep.conjugate()
        d_theta = 0.5 * np.array([[-s, -c * em], [c * ep, -s]], dtype=complex)
        d_phi = np.array([[0.0, 1j * s * em], [1j * s * ep, 0.0]], dtype=complex)
        return _cartesian_gradient(p, d_theta, d_phi)


class AntipodalHedgehogField:
    """The field p -> S_p(p), with analytic gradients."""

    def value(self, p: SphericalPoint) -> SU2Matrix:
        return gauge_matrix_Sp(p)

    def gradient(self, p: SphericalPoint) -> np.ndarray:
        c = math.cos(p.theta / 2.0)
        s = math.sin(p.theta / 2.0)
        ep = complex(math.cos(p.phi), math.sin(p.phi))
        em = ep.conjugate()
        d_theta = 0.5 * np.array([[c, -s * em], [s * ep, c]], dtype=complex)
        d_phi = np.array([[0.0, -1j * c * em], [-1j * c * ep, 0.0]], dtype=complex)
        return _cartesian_gradient(p, d_theta, d_phi)


class AdjointField:
    """The pointwise Hermitian adjoint of another field."""

    def __init__(self, base: GaugeField) -> None:
        self._base = base

    def value(self, p: SphericalPoint) -> SU2Matrix:
        return self._base.value(p).conj().T

    def gradient(self, p: SphericalPoint) -> np.ndarray:
        return np.conj(np.swapaxes(self._base.gradient(p), 1, 2))


class ConstantField:
    """A position-independent matrix, gradient zero."""

    def __init__(self, matrix: SU2Matrix) -> None:
        self._matrix = np.asarray(matrix, dtype=complex)
        if self._matrix.shape != (2, 2):
            raise DomainError(f"expected a 2x2 matrix, got shape {self._matrix.shape}")

    def value(self, p: SphericalPoint) -> SU2Matrix:
        return self._matrix

    def gradient(self, p: SphericalPoint) -> np.ndarray:
        return np.zeros((3, 2, 2), dtype=complex)


def gauge_transform(A: np.ndarray, field: GaugeField, p: SphericalPoint,
                    e: float) -> np.ndarray:
    """Transform a matrix potential: A_k -> V A_k V^{-1} + (i/e)(grad_k V) V^{-1}.

    V is the field value at p (unitary, so V^{-1} = V^dag); A has shape
    (3, 2, 2) with the spatial index first.
    """
    A = np.asarray(A, dtype=complex)
    if A.shape != (3, 2, 2):
        raise DomainError(f"potential must have shape (3, 2, 2), got {A.shape}")
    if e == 0:
        raise DomainError("coupling e must be nonzero")
    V = field.value(p)
    Vinv = V.conj().T
    G = field.gradient(p)
    out = np.empty_like(A)
    for k in range(3):
        out[k] = V @ A[k] @ Vinv + (1j / e) * (G[k] @ Vinv)
    return out


class AbelianizationVariant(Enum):
    DIRECT = "direct"
    PARITY = "parity"


@dataclass(frozen=True)
class AbelianizationReport:
    """Pointwise decomposition of the rotated hedgehog against the string form."""

    point: SphericalPoint
    variant: AbelianizationVariant
    off_diagonal_norm: float      # largest |off-diagonal entry| over k
    trace_norm: float             # largest |identity-part coefficient| over k
    fitted_coefficient: float     # c in M_k ~ c * A^D_k sigma_3
    fit_residual: float           # largest |M_k's sigma_3 part - c * A^D_k|


def abelianization_residual(p: SphericalPoint,
                            variant: AbelianizationVariant) -> AbelianizationReport:
    """Rotate the hedgehog at p and fit the diagonal against the string potential.

    DIRECT uses S and compares with the string potential at rhat; PARITY
    uses S_p and compares with the string potential at -rhat.  The string
    sits along STRING_AXIS in both cases.
    """
    if not isinstance(variant, AbelianizationVariant):
        raise DomainError(f"unknown abelianization variant: {variant!r}")
    rhat = p.unit_vector()
    A = wu_yang_potential(rhat)
    if variant is AbelianizationVariant.DIRECT:
        field: GaugeField = AdjointField(HedgehogField())
        reference = dirac_potential(rhat, STRING_AXIS)
    else:
        field = AdjointField(AntipodalHedgehogField())
        reference = dirac_potential(-rhat, STRING_AXIS)
    M = gauge_transform(A, field, p, e=-1.0)

    off_diagonal = max(float(abs(M[k][i, j]))
                       for k in range(3) for i, j in ((0, 1), (1, 0)))
    trace_part = np.array([(M[k][0, 0] + M[k][1, 1]) / 2.0 for k in range(3)])
    sigma3_part = np.array([(M[k][0, 0] - M[k][1, 1]) / 2.0 for k in range(3)])

    ref_sq = float(reference @ reference)
    if ref_sq > 0.0:
        c = float(np.real(reference @ sigma3_part) / ref_sq)
    else:
        c = 0.0
    residual = float(np.max(np.abs(sigma3_part - c * reference)))
    return AbelianizationReport(
        point=p,
        variant=variant,
        off_diagonal_norm=off_diagonal,
        trace_norm=float(np.max(np.abs(trace_part))),
        fitted_coefficient=c,
        fit_residual=residual,
    )


@dataclass(frozen=True)
class AbelianizationScanReport:
    """Aggregate of abelianization_residual over a random sample of points."""

    variant: AbelianizationVariant
    n_samples: int
    seed: int
    tolerance: float
    max_off_diagonal_norm: float
    max_trace_norm: float
    max_fit_residual: float
    coefficient_mean: float
    coefficient_spread: float     # max - min of the fitted coefficients
    passed: bool


def abelianization_scan(n_samples: int, seed: int,
                        variant: AbelianizationVariant,
                        tolerance: float = 1e-10) -> AbelianizationScanReport:
    """Run the pointwise check at seeded random points and aggregate.

    Passes when off-diagonals, identity parts, fit residuals and the spread
    of the fitted coefficient all stay within tolerance.
    """
    if not isinstance(n_samples, int) or isinstance(n_samples, bool) or n_samples < 1:
        raise DomainError(f"sample count must be a positive integer, got {n_samples!r}")
    points = sample_sphere_points(n_samples, seed)
    reports = [abelianization_residual(p, variant) for p in points]
    coeffs = [r.fitted_coefficient for r in reports]
    spread = max(coeffs) - min(coeffs)
    max_off = max(r.off_diagonal_norm for r in reports)
    max_trace = max(r.trace_norm for r in reports)
    max_residual = max(r.fit_residual for r in reports)
    passed = (max_off <= tolerance and max_trace <= tolerance
              and max_residual <= tolerance and spread <= tolerance)
    return AbelianizationScanReport(
        variant=variant,
        n_samples=n_samples,
        seed=seed,
        tolerance=tolerance,
        max_off_diagonal_norm=max_off,
        max_trace_norm=max_trace,
        max_fit_residual=max_residual,
        coefficient_mean=float(np.mean(coeffs)),
        coefficient_spread=float(spread),
        passed=passed,
    )


@dataclass(frozen=True)
class ParityOperatorReport:
    """Pointwise identities behind the redefined parity operator.

    The operator acts as (P' f)(r) = R(phi_r) f(-r).  Composing the gauge
    rotations gives S(p) S_p(p)^{-1} = R(phi)^{-1} = -R(phi); the sign is
    recorded as composition_sign, with deviations measured against that
    exact form.
    """

    n_samples: int
    seed: int
    composition_sign: float
    max_composition_deviation: float      # |S S_p^{-1} - sign * R(phi)|
    max_r_involution_deviation: float     # |R^2 + 1|
    max_r_antihermitian_deviation: float  # |R^dag + R|
    max_r_hat_discrepancy: float          # |r_hat_matrix(phi, 1/2) - R(phi)|
    max_r_shift_product_deviation: float  # |R(phi) R(phi+pi) - 1|
    max_hermiticity_deviation: float      # |<f, P'g> - <P'f, g>| on random pairs
    max_involution_deviation: float       # |P'^2 f - f| on random functions
    spinor_involution_phase: complex      # common phase of (P'^2 Y)/Y, j <= 3/2
    spinor_involution_phase_spread: float # its scatter over points and indices


def apply_parity_operator(values: np.ndarray, grid) -> np.ndarray:
    """Apply (P' f)(r) = R(phi_r) f(-r) to samples of shape (2, n_theta, n_phi).

    The grid's reflection is an exact index permutation, so no
    interpolation enters.
    """
    from .sphere_quadrature import reflection_indices

    values = np.asarray(values, dtype=complex)
    if values.ndim != 3 or values.shape[0] != 2:
        raise DomainError(f"expected samples of shape (2, n_theta, n_phi), got {values.shape}")
    theta_map, phi_map = reflection_indices(grid)
    reflected = values[:, theta_map][:, :, phi_map]
    out = np.empty_like(values)
    for k, phi in enumerate(grid.phi_nodes):
        R = r_matrix(float(phi))
        out[:, :, k] = np.tensordot(R, reflected[:, :, k], axes=(1, 0))
    return out


def _grid_inner(f: np.ndarray, g: np.ndarray, weights: np.ndarray) -> complex:
    return complex(np.sum(np.conj(f) * g * weights[None, :, :]))


def parity_operator_check(n_samples: int = 100, seed: int = 20260818,
                          n_theta: int = 32, n_phi: int = 32,
                          n_functions: int = 20) -> ParityOperatorReport:
    """Verify the algebra of the redefined parity operator.

    Checks, at seeded random points, the composition S S_p^{-1} against
    -R(phi); the matrix identities R^2 = -1 and R^dag = -R; agreement of
    the charge-1/2 azimuthal matrix with R; and, on a quadrature grid,
    Hermiticity and involutivity of P' on random two-component functions
    plus the phase of P'^2 on the harmonic spinors with j <= 3/2.
    """
    from .exact_algebra import HalfInt
    from .monopole_harmonics import MonopoleHarmonicIndex, monopole_harmonic_grid
    from .sampling import SplitMix64
    from .sphere_quadrature import build_grid, grid_weights

    points = sample_sphere_points(n_samples, seed)
    comp_dev = 0.0
    invol_dev = 0.0
    antiherm_dev = 0.0
    rhat_dev = 0.0
    shift_dev = 0.0
    for p in points:
        S = gauge_matrix_S(p)
        Sp = gauge_matrix_Sp(p)
        R = r_matrix(p.phi)
        comp_dev = max(comp_dev, float(np.max(np.abs(S @ Sp.conj().T - (-1.0) * R))))
        invol_dev = max(invol_dev, float(np.max(np.abs(R @ R + IDENTITY2))))
        antiherm_dev = max(antiherm_dev, float(np.max(np.abs(R.conj().T + R))))
        rhat_dev = max(rhat_dev, float(np.max(np.abs(r_hat_matrix(p.phi, 0.5) - R))))
        shifted = r_matrix(p.phi + math.pi)
        shift_dev = max(shift_dev, float(np.max(np.abs(R @ shifted - IDENTITY2))))

    grid = build_grid(n_theta, n_phi)
    weights = grid_weights(grid)
    rng = SplitMix64(seed ^ 0xA5A5A5A5)

    def random_function() -> np.ndarray:
        flat = np.array([complex(2.0 * rng.next_double() - 1.0,
                                 2.0 * rng.next_double() - 1.0)
                         for _ in range(2 * grid.n_theta * grid.n_phi)])
        return flat.reshape(2, grid.n_theta, grid.n_phi)

    herm_dev = 0.0
    invol_fn_dev = 0.0
    for _ in range(n_functions):
        f = random_function()
        g = random_function()
        lhs = _grid_inner(f, apply_parity_operator(g, grid), weights)
        rhs = _grid_inner(apply_parity_operator(f, grid), g, weights)
        herm_dev = max(herm_dev, abs(lhs - rhs))
        twice = apply_parity_operator(apply_parity_operator(f, grid), grid)
        invol_fn_dev = max(invol_fn_dev, float(np.max(np.abs(twice - f))))

    phase_spread = 0.0
    common_phase = 1.0 + 0.0j
    first = True
    theta = grid.theta_nodes
    for tj in (1, 3):
        for tm in range(-tj, tj + 1, 2):
            upper = MonopoleHarmonicIndex(HalfInt(tj), HalfInt(tm), HalfInt(1))
            lower = upper.with_mu_negated()
            spinor = np.stack([monopole_harmonic_grid(upper, theta, grid.phi_nodes),
                               monopole_harmonic_grid(lower, theta, grid.phi_nodes)])
            twice = apply_parity_operator(apply_parity_operator(spinor, grid), grid)
            mask = np.abs(spinor) > 1e-8
            ratio = twice[mask] / spinor[mask]
            phase = ratio / np.abs(ratio)
            if first:
                common_phase = complex(phase.flat[0])
                first = False
            phase_spread = max(phase_spread, float(np.max(np.abs(phase - common_phase))))

    return ParityOperatorReport(
        n_samples=n_samples,
        seed=seed,
        composition_sign=-1.0,
        max_composition_deviation=comp_dev,
        max_r_involution_deviation=invol_dev,
        max_r_antihermitian_deviation=antiherm_dev,
        max_r_hat_discrepancy=rhat_dev,
        max_r_shift_product_deviation=shift_dev,
        max_hermiticity_deviation=herm_dev,
        max_involution_deviation=invol_fn_dev,
        spinor_involution_phase=common_phase,
        spinor_involution_phase_spread=phase_spread,
    )
