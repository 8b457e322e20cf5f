"""Exact angular algebra for a charge moving around a magnetic monopole.

The package has three layers:

* exact kernels: half-integer bookkeeping, signed square roots of
  rationals, Wigner 3-j symbols evaluated without floating point;
* analytic geometry: monopole harmonics, sphere quadrature, the
  Wu-Yang and Dirac vector potentials, the gauge rotation that links
  them, and the redefined parity operator built from it;
* physics tables: electric dipole matrix elements for the two charge
  structures of the operator, with verdicts cross-checked between a
  quadrature route and an exact closed form.

An HTTP service (``monopole_algebra.service``) and a CLI
(``monopole_algebra.cli``) wrap the same handlers.
"""

from .errors import (
    DomainError,
    IncommensurableRadicandsError,
    MonopoleAlgebraError,
    NumericalError,
    SingularityError,
)
from .exact_algebra import HalfInt, SignedSqrtRational
from .gauge_geometry import (
    STRING_AXIS,
    AbelianizationReport,
    AbelianizationScanReport,
    AbelianizationVariant,
    ParityOperatorReport,
    abelianization_residual,
    abelianization_scan,
    apply_parity_operator,
    dirac_potential,
    gauge_matrix_S,
    gauge_matrix_Sp,
    gauge_transform,
    parity_operator_check,
    r_hat_matrix,
    r_matrix,
    wu_yang_potential,
)
from .monopole_harmonics import (
    GramReport,
    MonopoleHarmonicIndex,
    SphericalPoint,
    harmonic_gram,
    jacobi_polynomial,
    monopole_harmonic,
    monopole_harmonic_grid,
    normalization_constant,
    parity_map,
)
from .sampling import SplitMix64, sample_sphere_points
from .selection_rules import (
    VERDICT_THRESHOLD,
    ChargeOperatorKind,
    DipoleComponent,
    SpinorWavefunction,
    TransitionRecord,
    TransitionTable,
    TwofoldReport,
    matrix_element_closed_form,
    matrix_element_quadrature,
    selection_table,
    single_element_exact,
    twofold_check,
)
from .sphere_quadrature import SphereGrid, build_grid, integrate, integrate_values
from .wigner import (
    ThreeJArgs,
    clebsch_gordan_oracle,
    three_j,
    three_j_column_negation,
    three_j_via_clebsch_gordan,
    wigner_small_d,
)

__version__ = "1.0.0"

__all__ = [
    "MonopoleAlgebraError",
    "DomainError",
    "SingularityError",
    "NumericalError",
    "IncommensurableRadicandsError",
    "HalfInt",
    "SignedSqrtRational",
    "ThreeJArgs",
    "three_j",
    "three_j_column_negation",
    "three_j_via_clebsch_gordan",
    "clebsch_gordan_oracle",
    "wigner_small_d",
    "SphereGrid",
    "build_grid",
    "integrate",
    "integrate_values",
    "MonopoleHarmonicIndex",
    "SphericalPoint",
    "jacobi_polynomial",
    "normalization_constant",
    "monopole_harmonic",
    "monopole_harmonic_grid",
    "parity_map",
    "GramReport",
    "harmonic_gram",
    "SplitMix64",
    "sample_sphere_points",
    "STRING_AXIS",
    "wu_yang_potential",
    "dirac_potential",
    "gauge_matrix_S",
    "gauge_matrix_Sp",
    "r_matrix",
    "r_hat_matrix",
    "gauge_transform",
    "AbelianizationVariant",
    "AbelianizationReport",
    "AbelianizationScanReport",
    "abelianization_residual",
    "abelianization_scan",
    "apply_parity_operator",
    "ParityOperatorReport",
    "parity_operator_check",
    "VERDICT_THRESHOLD",
    "DipoleComponent",
    "ChargeOperatorKind",
    "SpinorWavefunction",
    "TransitionRecord",
    "TransitionTable",
    "selection_table",
    "single_element_exact",
    "matrix_element_quadrature",
    "matrix_element_closed_form",
    "TwofoldReport",
    "twofold_check",
    "__version__",
]
