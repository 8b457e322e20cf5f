"""Dipole matrix elements and selection rules around a monopole.

Two charge structures are covered.  With the pseudoscalar charge
(sigma_3-valued) the energy eigenfunctions carry a single harmonic
component and the dipole element reduces to one angular integral.  With
the scalar charge (identity-valued) the eigenfunctions pair the mu and
-mu harmonics into a two-component spinor and the element is the sum of
the component integrals.

Every element is computed two independent ways: by quadrature on a sphere
grid and by a closed form built from products of 3-j symbols,

    T_q = kappa_q (-1)^(nu+m') (-1)^(j'+j+1) sqrt((2j'+1)(2j+1))
          * (j' 1 j; -m' q m) (j' 1 j; -nu 0 nu),

with kappa scaled so that z = cos(theta), plus = sin(theta) e^{i phi} and
minus = sin(theta) e^{-i phi} are matched exactly (kappa_z = 1,
kappa_plus = -sqrt(2), kappa_minus = +sqrt(2)).  The closed form is exact
in the signed-square-root arithmetic; the quadrature grid integrates the
polynomial integrands to machine precision.  A transition is recorded as
allowed only when both computations clear the magnitude threshold.

Spinor elements follow the printed, unnormalized convention: the two
component integrals are summed with no 1/sqrt(2); dividing by 2 converts
any reported ratio to the unit-normalized convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

from .errors import DomainError
from .exact_algebra import HalfInt, SignedSqrtRational, as_half_int
from .monopole_harmonics import MonopoleHarmonicIndex, monopole_harmonic_grid
from .sphere_quadrature import SphereGrid, build_grid, grid_weights
from .wigner import ThreeJArgs, three_j

# a transition counts as allowed only above this magnitude, in both routes
VERDICT_THRESHOLD = 1e-8


class DipoleComponent(Enum):
    Z = "z"
    PLUS = "plus"
    MINUS = "minus"

    @property
    def q(self) -> int:
        """Azimuthal transfer: the element vanishes unless m' - m = q."""
        return {DipoleComponent.Z: 0, DipoleComponent.PLUS: 1,
                DipoleComponent.MINUS: -1}[self]


def _kappa(component: DipoleComponent) -> SignedSqrtRational:
    if component is DipoleComponent.Z:
        return SignedSqrtRational.one()
    if component is DipoleComponent.PLUS:
        return SignedSqrtRational(-1, Fraction(2))
    return SignedSqrtRational(1, Fraction(2))


class ChargeOperatorKind(Enum):
    PSEUDOSCALAR_SIGMA3 = "pseudoscalar"
    SCALAR_IDENTITY = "scalar"

    @property
    def lower_component_weight(self) -> int:
        """Eigenvalue of the charge matrix on the lower (mu -> -mu) slot."""
        return -1 if self is ChargeOperatorKind.PSEUDOSCALAR_SIGMA3 else 1


@dataclass(frozen=True)
class SpinorWavefunction:
    """Two-component state (Y_{j m mu}, phase * Y_{j m -mu}).

    The relative phase must be unimodular.  Component integrals are summed
    without a 1/sqrt(2), matching the printed convention.
    """

    upper: MonopoleHarmonicIndex
    relative_phase: complex = 1.0 + 0.0j

    def __post_init__(self) -> None:
        phase = complex(self.relative_phase)
        if abs(abs(phase) - 1.0) > 1e-12:
            raise DomainError(f"relative phase must be unimodular, got {phase!r}")
        object.__setattr__(self, "relative_phase", phase)

    @property
    def lower(self) -> MonopoleHarmonicIndex:
        return self.upper.with_mu_negated()


def component_values(component: DipoleComponent, theta: np.ndarray,
                     phi: np.ndarray) -> np.ndarray:
    """Grid samples of the dipole component, shape (len(theta), len(phi))."""
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    if component is DipoleComponent.Z:
        return np.outer(np.cos(theta), np.ones_like(phi)).astype(complex)
    phase = np.exp(1j * component.q * phi)
    return np.outer(np.sin(theta), phase)


def _harmonic_grid(idx: MonopoleHarmonicIndex, grid: SphereGrid,
                   cache: "dict | None" = None) -> np.ndarray:
    key = (idx.j.twice_value, idx.m.twice_value, idx.mu.twice_value)
    if cache is not None and key in cache:
        return cache[key]
    values = monopole_harmonic_grid(idx, grid.theta_nodes, grid.phi_nodes)
    if cache is not None:
        cache[key] = values
    return values


def _single_quadrature(bra: MonopoleHarmonicIndex, ket: MonopoleHarmonicIndex,
                       component: DipoleComponent, grid: SphereGrid,
                       cache: "dict | None" = None) -> complex:
    weights = grid_weights(grid)
    f = component_values(component, grid.theta_nodes, grid.phi_nodes)
    bra_values = _harmonic_grid(bra, grid, cache)
    ket_values = _harmonic_grid(ket, grid, cache)
    return complex(np.sum(np.conj(bra_values) * f * ket_values * weights))


def matrix_element_quadrature(bra, ket, component: DipoleComponent,
                              operator: ChargeOperatorKind,
                              grid: SphereGrid) -> complex:
    """Angular dipole element by quadrature.

    Accepts a pair of single harmonics (both MonopoleHarmonicIndex; the
    state occupies the upper slot, where both charge matrices act as +1)
    or a pair of SpinorWavefunction (component integrals summed, the lower
    slot weighted by the charge matrix eigenvalue).
    """
    if isinstance(bra, MonopoleHarmonicIndex) and isinstance(ket, MonopoleHarmonicIndex):
        return _single_quadrature(bra, ket, component, grid)
    if isinstance(bra, SpinorWavefunction) and isinstance(ket, SpinorWavefunction):
        upper = _single_quadrature(bra.upper, ket.upper, component, grid)
        lower = _single_quadrature(bra.lower, ket.lower, component, grid)
        pairing = bra.relative_phase.conjugate() * ket.relative_phase
        return upper + operator.lower_component_weight * pairing * lower
    raise DomainError("bra and ket must both be harmonics or both be spinor states")


def _three_j(tj1: int, tj2: int, tj3: int, tm1: int, tm2: int,
             tm3: int) -> SignedSqrtRational:
    return three_j(ThreeJArgs(HalfInt(tj1), HalfInt(tj2), HalfInt(tj3),
                              HalfInt(tm1), HalfInt(tm2), HalfInt(tm3)))


def single_element_exact(j_prime: HalfInt, m_prime: HalfInt, j: HalfInt,
                         m: HalfInt, nu: HalfInt,
                         component: DipoleComponent) -> SignedSqrtRational:
    """Closed form for one component pair carrying harmonic subscript nu.

    Exact in signed-square-root arithmetic; vanishes canonically whenever
    either 3-j symbol does.
    """
    tjp, tmp = j_prime.twice_value, m_prime.twice_value
    tj, tm, tnu = j.twice_value, m.twice_value, nu.twice_value
    if abs(tnu) > tj or abs(tnu) > tjp or (tj - tnu) % 2 or (tjp - tnu) % 2:
        return SignedSqrtRational.zero()
    q = component.q
    m_symbol = _three_j(tjp, 2, tj, -tmp, 2 * q, tm)
    nu_symbol = _three_j(tjp, 2, tj, -tnu, 0, tnu)
    if m_symbol.is_zero or nu_symbol.is_zero:
        return SignedSqrtRational.zero()
    # (-1)^(nu + m') (-1)^(j' + j + 1); both exponents are integers
    sign_exp = (tnu + tmp) // 2 + (tjp + tj) // 2 + 1
    scale = SignedSqrtRational.sqrt_of(Fraction((tjp + 1) * (tj + 1)))
    value = _kappa(component) * m_symbol * nu_symbol * scale
    return -value if sign_exp % 2 else value


def _spinor_closed(j_prime: HalfInt, m_prime: HalfInt, j: HalfInt, m: HalfInt,
                   mu: HalfInt, component: DipoleComponent,
                   operator: ChargeOperatorKind, pairing: complex) -> complex:
    upper = single_element_exact(j_prime, m_prime, j, m, mu, component)
    lower = single_element_exact(j_prime, m_prime, j, m, -mu, component)
    return (upper.to_float()
            + operator.lower_component_weight * pairing * lower.to_float())


def matrix_element_closed_form(j_prime, m_prime, j, m, mu,
                               component: DipoleComponent,
                               operator: ChargeOperatorKind) -> complex:
    """Closed-form dipole element for the operator's natural eigenstates.

    Pseudoscalar charge: single-component states, one exact term.  Scalar
    charge: spinor states with relative phase +1, the two component terms
    summed in the printed, unnormalized convention.
    """
    j_prime, m_prime = as_half_int(j_prime), as_half_int(m_prime)
    j, m, mu = as_half_int(j), as_half_int(m), as_half_int(mu)
    if operator is ChargeOperatorKind.PSEUDOSCALAR_SIGMA3:
        return complex(single_element_exact(j_prime, m_prime, j, m, mu, component)
                       .to_float())
    return _spinor_closed(j_prime, m_prime, j, m, mu, component, operator,
                          pairing=1.0 + 0.0j)


@dataclass(frozen=True)
class TransitionRecord:
    """One dipole transition, valued by both routes."""

    j: HalfInt
    m: HalfInt
    j_prime: HalfInt
    m_prime: HalfInt
    component: DipoleComponent
    operator: ChargeOperatorKind
    quadrature_value: complex
    closed_form_value: complex
    verdict: str                  # "allowed" | "forbidden"
    dual_agreement: float         # |quadrature - closed form|


@dataclass(frozen=True)
class TransitionTable:
    """All dipole transitions with j, j' up to j_max for one charge structure."""

    operator: ChargeOperatorKind
    mu: HalfInt
    j_max: HalfInt
    n_theta: int
    n_phi: int
    records: tuple[TransitionRecord, ...]
    fitted_prefactors: dict

    def allowed(self) -> list[TransitionRecord]:
        return [r for r in self.records if r.verdict == "allowed"]


def _j_range(mu: HalfInt, j_max: HalfInt) -> list[HalfInt]:
    lowest = abs(mu.twice_value)
    if j_max.twice_value < lowest:
        raise DomainError(f"j_max must be at least |mu|: j_max={j_max}, mu={mu}")
    return [HalfInt(t) for t in range(lowest, j_max.twice_value + 1, 2)]


def _m_range(j: HalfInt) -> list[HalfInt]:
    return [HalfInt(t) for t in range(-j.twice_value, j.twice_value + 1, 2)]


def selection_table(j_max, mu, operator: ChargeOperatorKind,
                    grid: SphereGrid) -> TransitionTable:
    """Tabulate every dipole element with j, j' in [|mu|, j_max].

    Each record carries the quadrature value, the closed-form value, the
    verdict (allowed only when both magnitudes clear VERDICT_THRESHOLD)
    and the absolute difference of the two routes.  The first record with
    a nonvanishing closed form per component also fits the overall
    prefactor quadrature/closed, stored in fitted_prefactors; the closed
    form carries the complete normalization, so the fits sit at 1.
    """
    j_max = as_half_int(j_max)
    mu = as_half_int(mu)
    if not isinstance(operator, ChargeOperatorKind):
        raise DomainError(f"unknown charge operator: {operator!r}")
    j_values = _j_range(mu, j_max)
    cache: dict = {}
    records: list[TransitionRecord] = []
    prefactors: dict = {}
    for j in j_values:
        for m in _m_range(j):
            for j_prime in j_values:
                for m_prime in _m_range(j_prime):
                    for component in DipoleComponent:
                        if m_prime.twice_value - m.twice_value != 2 * component.q:
                            continue
                        if operator is ChargeOperatorKind.PSEUDOSCALAR_SIGMA3:
                            bra = MonopoleHarmonicIndex(j_prime, m_prime, mu)
                            ket = MonopoleHarmonicIndex(j, m, mu)
                        else:
                            bra = SpinorWavefunction(
                                MonopoleHarmonicIndex(j_prime, m_prime, mu))
                            ket = SpinorWavefunction(MonopoleHarmonicIndex(j, m, mu))
                        quad = matrix_element_quadrature(bra, ket, component,
                                                         operator, grid)
                        closed = matrix_element_closed_form(
                            j_prime, m_prime, j, m, mu, component, operator)
                        verdict = ("allowed"
                                   if abs(quad) > VERDICT_THRESHOLD
                                   and abs(closed) > VERDICT_THRESHOLD
                                   else "forbidden")
                        key = component.value
                        if key not in prefactors and abs(closed) > VERDICT_THRESHOLD:
                            prefactors[key] = quad / closed
                        records.append(TransitionRecord(
                            j=j, m=m, j_prime=j_prime, m_prime=m_prime,
                            component=component, operator=operator,
                            quadrature_value=quad, closed_form_value=closed,
                            verdict=verdict,
                            dual_agreement=abs(quad - closed),
                        ))
    return TransitionTable(
        operator=operator, mu=mu, j_max=j_max,
        n_theta=grid.n_theta, n_phi=grid.n_phi,
        records=tuple(records), fitted_prefactors=prefactors,
    )


@dataclass(frozen=True)
class TwofoldPhaseResult:
    """Spinor-to-single ratios at one relative phase, from the closed form.

    Ratios follow the printed, unnormalized spinor convention; multiply by
    1/2 for unit-normalized spinors.  A ratio is None when every single
    element for the (j', j) pair vanishes.
    """

    relative_phase: complex
    sigma3_ratio: "complex | None"
    sigma3_ratio_spread: float
    identity_ratio: "complex | None"
    identity_ratio_spread: float


@dataclass(frozen=True)
class TwofoldReport:
    """How spinor states rescale the dipole elements of one (j', j) pair.

    The scan covers relative phases {+1, -1, +i, -i} for both charge
    matrices, so the phase convention matching any claimed enhancement can
    be read off rather than assumed.  Quadrature agreement is measured at
    the requested phase.
    """

    j_prime: HalfInt
    j: HalfInt
    mu: HalfInt
    delta_j: int
    requested_phase: complex
    requested: TwofoldPhaseResult
    scan: tuple[TwofoldPhaseResult, ...]
    normalized_ratio_scale: float        # multiply ratios by this for unit norm
    single_max_abs: float
    all_single_elements_vanish: bool
    max_quadrature_disagreement: float
    n_theta: int
    n_phi: int


def _phase_result(j_prime: HalfInt, j: HalfInt, mu: HalfInt,
                  phase: complex) -> TwofoldPhaseResult:
    ratios: dict[ChargeOperatorKind, list[complex]] = {
        ChargeOperatorKind.PSEUDOSCALAR_SIGMA3: [],
        ChargeOperatorKind.SCALAR_IDENTITY: [],
    }
    for m in _m_range(j):
        for component in DipoleComponent:
            tmp = m.twice_value + 2 * component.q
            if abs(tmp) > j_prime.twice_value:
                continue
            m_prime = HalfInt(tmp)
            single = single_element_exact(j_prime, m_prime, j, m, mu,
                                          component).to_float()
            if abs(single) <= VERDICT_THRESHOLD:
                continue
            for operator in ratios:
                spinor = _spinor_closed(j_prime, m_prime, j, m, mu, component,
                                        operator, pairing=phase)
                ratios[operator].append(spinor / single)

    def summarize(values: list[complex]) -> tuple["complex | None", float]:
        if not values:
            return None, 0.0
        head = values[0]
        return head, max(abs(v - head) for v in values)

    sigma3, sigma3_spread = summarize(ratios[ChargeOperatorKind.PSEUDOSCALAR_SIGMA3])
    ident, ident_spread = summarize(ratios[ChargeOperatorKind.SCALAR_IDENTITY])
    return TwofoldPhaseResult(
        relative_phase=phase,
        sigma3_ratio=sigma3, sigma3_ratio_spread=sigma3_spread,
        identity_ratio=ident, identity_ratio_spread=ident_spread,
    )


def twofold_check(j_prime, j, mu, relative_phase: complex = 1.0 + 0.0j,
                  n_theta: int = 64, n_phi: int = 64) -> TwofoldReport:
    """Compare spinor-state dipole elements against single-component ones.

    For every m, m' and dipole component of the (j', j) pair the closed
    form gives the ratio spinor/single; the spread over elements verifies
    the ratio is a property of the pair alone.  Quadrature recomputes the
    spinor elements at the requested phase as an independent check.
    """
    j_prime, j, mu = as_half_int(j_prime), as_half_int(j), as_half_int(mu)
    if (j_prime.twice_value - j.twice_value) % 2 != 0:
        raise DomainError(f"j' - j must be an integer: j'={j_prime}, j={j}")
    for name, value in (("j'", j_prime), ("j", j)):
        if value.twice_value < abs(mu.twice_value):
            raise DomainError(f"{name} must be at least |mu|: {value} < |{mu}|")
        if (value.twice_value - mu.twice_value) % 2 != 0:
            raise DomainError(f"{name} - mu must be an integer: {value}, mu={mu}")
    phase = complex(relative_phase)
    if abs(abs(phase) - 1.0) > 1e-12:
        raise DomainError(f"relative phase must be unimodular, got {phase!r}")

    scan_phases = (1.0 + 0.0j, -1.0 + 0.0j, 1.0j, -1.0j)
    scan = tuple(_phase_result(j_prime, j, mu, p) for p in scan_phases)
    requested = next((r for r in scan if r.relative_phase == phase), None)
    if requested is None:
        requested = _phase_result(j_prime, j, mu, phase)

    grid = build_grid(n_theta, n_phi)
    cache: dict = {}
    single_max = 0.0
    disagreement = 0.0
    for m in _m_range(j):
        for component in DipoleComponent:
            tmp = m.twice_value + 2 * component.q
            if abs(tmp) > j_prime.twice_value:
                continue
            m_prime = HalfInt(tmp)
            single_closed = single_element_exact(j_prime, m_prime, j, m, mu,
                                                 component).to_float()
            single_max = max(single_max, abs(single_closed))
            bra_idx = MonopoleHarmonicIndex(j_prime, m_prime, mu)
            ket_idx = MonopoleHarmonicIndex(j, m, mu)
            single_quad = _single_quadrature(bra_idx, ket_idx, component, grid, cache)
            disagreement = max(disagreement, abs(single_quad - single_closed))
            for operator in ChargeOperatorKind:
                bra = SpinorWavefunction(bra_idx)
                ket = SpinorWavefunction(ket_idx, relative_phase=phase)
                upper = _single_quadrature(bra.upper, ket.upper, component, grid, cache)
                lower = _single_quadrature(bra.lower, ket.lower, component, grid, cache)
                spinor_quad = upper + operator.lower_component_weight * phase * lower
                spinor_closed = _spinor_closed(j_prime, m_prime, j, m, mu,
                                               component, operator, pairing=phase)
                disagreement = max(disagreement, abs(spinor_quad - spinor_closed))

    return TwofoldReport(
        j_prime=j_prime, j=j, mu=mu,
        delta_j=(j_prime.twice_value - j.twice_value) // 2,
        requested_phase=phase,
        requested=requested,
        scan=scan,
        normalized_ratio_scale=0.5,
        single_max_abs=single_max,
        all_single_elements_vanish=(single_max <= VERDICT_THRESHOLD),
        max_quadrature_disagreement=disagreement,
        n_theta=n_theta, n_phi=n_phi,
    )
