"""Service handlers: parse wire-format inputs, call the library, shape records.

Each handler is a pure function returning an OutputRecord; the FastAPI app
and the CLI both call these, so the two surfaces cannot drift apart.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Any

from ..errors import DomainError
from ..exact_algebra import HalfInt
from ..gauge_geometry import AbelianizationVariant, abelianization_scan
from ..monopole_harmonics import (MonopoleHarmonicIndex, SphericalPoint,
                                  harmonic_gram, monopole_harmonic,
                                  normalization_constant, parity_map)
from ..selection_rules import (VERDICT_THRESHOLD, ChargeOperatorKind,
                               TransitionTable, selection_table)
from ..sphere_quadrature import build_grid
from ..wigner import ThreeJArgs, three_j

CSV_COLUMNS = ("j", "m", "j_prime", "m_prime", "component", "operator",
               "re_value", "im_value", "verdict", "dual_agreement")


@dataclass(frozen=True)
class OutputRecord:
    """Uniform result envelope: echoed command, inputs, payload, verdict."""

    command: str
    parameters: dict[str, Any]
    results: dict[str, Any]
    tolerances: dict[str, float]
    passed: bool

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2)


def _parse_half_int(value, name: str) -> HalfInt:
    if isinstance(value, HalfInt):
        return value
    if isinstance(value, bool):
        raise DomainError(f"{name}: expected a half-integer, got {value!r}")
    if isinstance(value, int):
        return HalfInt.from_int(value)
    try:
        return HalfInt.parse(str(value))
    except DomainError as exc:
        raise DomainError(f"{name}: {exc}") from None


def _complex_payload(z: complex) -> dict[str, float]:
    z = complex(z)
    return {"im": z.imag, "re": z.real}


def handle_harmonic(j, m, mu, theta: float, phi: float) -> OutputRecord:
    idx = MonopoleHarmonicIndex(_parse_half_int(j, "j"), _parse_half_int(m, "m"),
                                _parse_half_int(mu, "mu"))
    point = SphericalPoint(float(theta), float(phi))
    value = monopole_harmonic(idx, point)
    partner, reflected, phase = parity_map(idx, point)
    return OutputRecord(
        command="harmonic",
        parameters={"j": str(idx.j), "m": str(idx.m), "mu": str(idx.mu),
                    "theta": point.theta, "phi": point.phi},
        results={
            "value": _complex_payload(value),
            "normalization": normalization_constant(idx),
            "parity": {
                "phase": _complex_payload(phase),
                "partner": {"j": str(partner.j), "m": str(partner.m),
                            "mu": str(partner.mu)},
                "reflected_point": {"theta": reflected.theta,
                                    "phi": reflected.phi},
            },
        },
        tolerances={},
        passed=True,
    )


def handle_wigner3j(j1, j2, j3, m1, m2, m3) -> OutputRecord:
    args = ThreeJArgs(
        _parse_half_int(j1, "j1"), _parse_half_int(j2, "j2"),
        _parse_half_int(j3, "j3"), _parse_half_int(m1, "m1"),
        _parse_half_int(m2, "m2"), _parse_half_int(m3, "m3"),
    )
    value = three_j(args)
    return OutputRecord(
        command="wigner3j",
        parameters={"j1": str(args.j1), "j2": str(args.j2), "j3": str(args.j3),
                    "m1": str(args.m1), "m2": str(args.m2), "m3": str(args.m3)},
        results={
            "sign": value.sign,
            "radicand": {"denominator": value.radicand.denominator,
                         "numerator": value.radicand.numerator},
            "value": value.to_float(),
            "rendered": value.render(),
        },
        tolerances={},
        passed=True,
    )


def handle_gauge_check(samples: int, seed: int, variant: str,
                       tolerance: float = 1e-10) -> OutputRecord:
    try:
        chosen = AbelianizationVariant(variant)
    except ValueError:
        raise DomainError(f"variant: expected one of "
                          f"{[v.value for v in AbelianizationVariant]}, "
                          f"got {variant!r}") from None
    report = abelianization_scan(samples, seed, chosen, tolerance)
    return OutputRecord(
        command="gauge-check",
        parameters={"samples": report.n_samples, "seed": report.seed,
                    "variant": chosen.value},
        results={
            "max_off_diagonal_norm": report.max_off_diagonal_norm,
            "max_trace_norm": report.max_trace_norm,
            "max_fit_residual": report.max_fit_residual,
            "coefficient_mean": report.coefficient_mean,
            "coefficient_spread": report.coefficient_spread,
        },
        tolerances={"pass_threshold": tolerance},
        passed=report.passed,
    )


def _table_rows(table: TransitionTable) -> list[dict[str, Any]]:
    rows = []
    for r in table.records:
        rows.append({
            "j": str(r.j), "m": str(r.m),
            "j_prime": str(r.j_prime), "m_prime": str(r.m_prime),
            "component": r.component.value, "operator": r.operator.value,
            "re_value": r.quadrature_value.real,
            "im_value": r.quadrature_value.imag,
            "verdict": r.verdict,
            "dual_agreement": r.dual_agreement,
        })
    return rows


def handle_selection_table(j_max, mu, operator: str, n_theta: int = 64,
                           n_phi: int = 64) -> OutputRecord:
    try:
        kind = ChargeOperatorKind(operator)
    except ValueError:
        raise DomainError(f"operator: expected one of "
                          f"{[k.value for k in ChargeOperatorKind]}, "
                          f"got {operator!r}") from None
    grid = build_grid(int(n_theta), int(n_phi))
    table = selection_table(_parse_half_int(j_max, "j_max"),
                            _parse_half_int(mu, "mu"), kind, grid)
    rows = _table_rows(table)
    max_disagreement = max((r.dual_agreement for r in table.records), default=0.0)
    return OutputRecord(
        command="selection-table",
        parameters={"j_max": str(table.j_max), "mu": str(table.mu),
                    "operator": kind.value, "n_theta": table.n_theta,
                    "n_phi": table.n_phi},
        results={
            "rows": rows,
            "row_count": len(rows),
            "allowed_count": sum(1 for r in rows if r["verdict"] == "allowed"),
            "max_dual_agreement": max_disagreement,
            "fitted_prefactors": {key: _complex_payload(value)
                                  for key, value in
                                  sorted(table.fitted_prefactors.items())},
        },
        tolerances={"verdict_threshold": VERDICT_THRESHOLD},
        passed=max_disagreement <= VERDICT_THRESHOLD,
    )


def table_record_to_csv(record: OutputRecord) -> str:
    """Render a selection-table record as CSV with the fixed column order."""
    lines = [",".join(CSV_COLUMNS)]
    for row in record.results["rows"]:
        lines.append(",".join(_csv_cell(row[column]) for column in CSV_COLUMNS))
    return "\n".join(lines) + "\n"


def _csv_cell(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def handle_orthonormality(mu, j_max, n_theta: int = 64, n_phi: int = 64,
                          tolerance: float = 1e-9) -> OutputRecord:
    grid = build_grid(int(n_theta), int(n_phi))
    report = harmonic_gram(_parse_half_int(mu, "mu"),
                           _parse_half_int(j_max, "j_max"), grid)
    spread_tolerance = tolerance / 10.0
    passed = (report.max_off_diagonal <= tolerance
              and report.diagonal_spread <= spread_tolerance)
    return OutputRecord(
        command="orthonormality",
        parameters={"mu": str(report.mu), "j_max": str(report.j_max),
                    "n_theta": report.n_theta, "n_phi": report.n_phi},
        results={
            "dimension": report.dimension,
            "max_off_diagonal": report.max_off_diagonal,
            "diagonal_mean": report.diagonal_mean,
            "diagonal_spread": report.diagonal_spread,
        },
        tolerances={"off_diagonal": tolerance,
                    "diagonal_spread": spread_tolerance},
        passed=passed,
    )
