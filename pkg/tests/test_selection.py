"""Dipole selection rules: frozen elements, two routes, the twofold phases.

The closed form is exact symbol algebra; quadrature is machine precision
numerics on trig polynomials.  Agreement between them is the core check,
and the frozen values below were derived by hand from the 3-j recoupling.
"""

import math
from fractions import Fraction

import numpy as np
import pytest

from monopole_algebra import (
    VERDICT_THRESHOLD,
    ChargeOperatorKind,
    DipoleComponent,
    DomainError,
    HalfInt,
    MonopoleHarmonicIndex,
    SpinorWavefunction,
    build_grid,
    matrix_element_closed_form,
    matrix_element_quadrature,
    selection_table,
    single_element_exact,
    twofold_check,
)
from monopole_algebra.selection_rules import component_values

H = HalfInt.parse
PS = ChargeOperatorKind.PSEUDOSCALAR_SIGMA3
SC = ChargeOperatorKind.SCALAR_IDENTITY


def idx(j, m, mu):
    return MonopoleHarmonicIndex.of(j, m, mu)


class TestComponents:
    def test_q_values(self):
        assert DipoleComponent.Z.q == 0
        assert DipoleComponent.PLUS.q == 1
        assert DipoleComponent.MINUS.q == -1

    def test_component_grids(self):
        theta = np.array([0.3, 1.0])
        phi = np.array([0.0, 2.0])
        z = component_values(DipoleComponent.Z, theta, phi)
        assert z[1, 0] == pytest.approx(math.cos(1.0), abs=1e-16)
        p = component_values(DipoleComponent.PLUS, theta, phi)
        assert p[0, 1] == pytest.approx(math.sin(0.3) * np.exp(2j), abs=1e-15)
        m = component_values(DipoleComponent.MINUS, theta, phi)
        assert m[0, 1] == pytest.approx(math.sin(0.3) * np.exp(-2j), abs=1e-15)


class TestFrozenSingleElements:
    def test_z_diagonal(self):
        v = single_element_exact(H("1/2"), H("1/2"), H("1/2"), H("1/2"), H("1/2"),
                                 DipoleComponent.Z)
        assert v.sign == -1 and v.radicand == Fraction(1, 9)

    def test_z_diagonal_negated_charge(self):
        v = single_element_exact(H("1/2"), H("1/2"), H("1/2"), H("1/2"), H("-1/2"),
                                 DipoleComponent.Z)
        assert v.sign == 1 and v.radicand == Fraction(1, 9)

    def test_plus_diagonal(self):
        v = single_element_exact(H("1/2"), H("1/2"), H("1/2"), H("-1/2"), H("1/2"),
                                 DipoleComponent.PLUS)
        assert v.sign == -1 and v.radicand == Fraction(4, 9)

    def test_raising_to_higher_j(self):
        # (1/2,1/2) -> (3/2,3/2) with sigma+ component, mu = 1/2
        v = single_element_exact(H("3/2"), H("3/2"), H("1/2"), H("1/2"), H("1/2"),
                                 DipoleComponent.PLUS)
        q = matrix_element_quadrature(idx("3/2", "3/2", "1/2"), idx("1/2", "1/2", "1/2"),
                                      DipoleComponent.PLUS, PS, build_grid(32, 32))
        assert v.to_float() == pytest.approx(q.real, abs=1e-13)
        assert abs(q.imag) < 1e-14

    def test_out_of_range_nu_is_zero(self):
        assert single_element_exact(H("1/2"), H("1/2"), H("1/2"), H("1/2"), H("3/2"),
                                    DipoleComponent.Z).sign == 0

    def test_azimuthal_mismatch_is_zero(self):
        assert single_element_exact(H("1/2"), H("1/2"), H("1/2"), H("1/2"),
                                    H("1/2"), DipoleComponent.PLUS).sign == 0


class TestTwoRoutesAgree:
    @pytest.mark.parametrize("component", list(DipoleComponent))
    def test_harmonic_pairs(self, grid64, component):
        for tjp, tmp, tj, tm in [(1, 1, 1, 1), (3, 1, 1, 1), (3, -3, 1, -1),
                                 (5, 1, 3, 1), (5, 5, 3, 3), (3, 3, 3, 1)]:
            if abs(tmp - tm) != 2 * abs(component.q) and tmp - tm != 2 * component.q:
                continue
            bra = MonopoleHarmonicIndex(HalfInt(tjp), HalfInt(tmp), HalfInt(1))
            ket = MonopoleHarmonicIndex(HalfInt(tj), HalfInt(tm), HalfInt(1))
            quad = matrix_element_quadrature(bra, ket, component, PS, grid64)
            closed = matrix_element_closed_form(HalfInt(tjp), HalfInt(tmp),
                                                HalfInt(tj), HalfInt(tm),
                                                HalfInt(1), component, PS)
            assert quad == pytest.approx(closed, abs=1e-13)

    def test_spinor_pairs(self, grid64):
        bra = SpinorWavefunction(idx("3/2", "1/2", "1/2"))
        ket = SpinorWavefunction(idx("1/2", "1/2", "1/2"))
        quad = matrix_element_quadrature(bra, ket, DipoleComponent.Z, SC, grid64)
        closed = matrix_element_closed_form(H("3/2"), H("1/2"), H("1/2"), H("1/2"),
                                            H("1/2"), DipoleComponent.Z, SC)
        assert quad == pytest.approx(closed, abs=1e-13)

    def test_mismatched_pair_rejected(self, grid32):
        with pytest.raises(DomainError):
            matrix_element_quadrature(idx("1/2", "1/2", "1/2"),
                                      SpinorWavefunction(idx("1/2", "1/2", "1/2")),
                                      DipoleComponent.Z, PS, grid32)


class TestSpinorWavefunction:
    def test_lower_negates_mu(self):
        s = SpinorWavefunction(idx("3/2", "1/2", "1/2"))
        assert s.lower.mu == H("-1/2")
        assert s.upper.mu == H("1/2")

    def test_phase_must_be_unimodular(self):
        with pytest.raises(DomainError):
            SpinorWavefunction(idx("1/2", "1/2", "1/2"), relative_phase=0.5 + 0.0j)

    def test_unit_phase_variants_allowed(self):
        for ph in (1, -1, 1j, -1j):
            SpinorWavefunction(idx("1/2", "1/2", "1/2"), relative_phase=complex(ph))


class TestSelectionTable:
    def test_pseudoscalar_structure(self, grid64):
        t = selection_table(H("3/2"), H("1/2"), PS, grid64)
        assert len(t.records) == 26
        assert all(r.m_prime.twice_value - r.m.twice_value == 2 * r.component.q
                   for r in t.records)
        assert all(r.verdict == "allowed" for r in t.records)
        assert t.fitted_prefactors["z"] == pytest.approx(1.0, abs=1e-12)
        assert max(r.dual_agreement for r in t.records) < 1e-13

    def test_scalar_structure(self, grid64):
        t = selection_table(H("3/2"), H("1/2"), SC, grid64)
        same_j = [r for r in t.records if r.j == r.j_prime]
        cross_j = [r for r in t.records if r.j != r.j_prime]
        assert same_j and cross_j
        assert all(r.verdict == "forbidden" for r in same_j)
        assert max(abs(r.quadrature_value) for r in same_j) < 1e-13
        assert all(r.verdict == "allowed" for r in cross_j)

    def test_delta_j_one_sets_match_across_operators(self, grid64):
        def key(r):
            return (r.j.twice_value, r.m.twice_value, r.j_prime.twice_value,
                    r.m_prime.twice_value, r.component.value)

        ps = selection_table(H("3/2"), H("1/2"), PS, grid64)
        sc = selection_table(H("3/2"), H("1/2"), SC, grid64)
        ps_cross = {key(r) for r in ps.records if r.verdict == "allowed" and r.j != r.j_prime}
        sc_cross = {key(r) for r in sc.records if r.verdict == "allowed"}
        assert ps_cross == sc_cross

    def test_integer_charge_recovers_standard_rules(self, grid64):
        # mu = 0 is an ordinary particle: parity kills delta j = 0 dipoles
        t = selection_table(H("2"), H("0"), PS, grid64)
        same_j = [r for r in t.records if r.j == r.j_prime]
        assert same_j
        assert all(r.verdict == "forbidden" for r in same_j)
        assert any(r.verdict == "allowed" for r in t.records)

    def test_verdict_gap_is_wide(self, grid64):
        # every magnitude sits orders of magnitude away from the threshold
        for operator in (PS, SC):
            t = selection_table(H("5/2"), H("1/2"), operator, grid64)
            for r in t.records:
                size = abs(r.quadrature_value)
                assert size < 1e-5 * VERDICT_THRESHOLD or size > 1e3 * VERDICT_THRESHOLD

    def test_j_max_below_mu_rejected(self, grid32):
        with pytest.raises(DomainError):
            selection_table(H("1/2"), H("3/2"), PS, grid32)

    def test_allowed_filter(self, grid64):
        t = selection_table(H("3/2"), H("1/2"), SC, grid64)
        assert {r.verdict for r in t.allowed()} == {"allowed"}


class TestTwofold:
    def test_cross_j_printed_phase(self):
        rep = twofold_check(H("3/2"), H("1/2"), H("1/2"))
        r = rep.requested
        assert r.sigma3_ratio == pytest.approx(0.0, abs=1e-12)
        assert r.identity_ratio == pytest.approx(2.0, abs=1e-12)
        assert r.identity_ratio_spread < 1e-12
        assert rep.max_quadrature_disagreement < 1e-12
        assert not rep.all_single_elements_vanish

    def test_cross_j_flipped_phase(self):
        rep = twofold_check(H("3/2"), H("1/2"), H("1/2"), relative_phase=-1.0 + 0.0j)
        r = rep.requested
        assert r.sigma3_ratio == pytest.approx(2.0, abs=1e-12)
        assert r.identity_ratio == pytest.approx(0.0, abs=1e-12)

    def test_same_j_printed_phase(self):
        rep = twofold_check(H("1/2"), H("1/2"), H("1/2"))
        r = rep.requested
        assert r.sigma3_ratio == pytest.approx(2.0, abs=1e-12)
        assert r.identity_ratio == pytest.approx(0.0, abs=1e-12)

    def test_scan_covers_four_phases(self):
        rep = twofold_check(H("5/2"), H("3/2"), H("1/2"))
        phases = [r.relative_phase for r in rep.scan]
        assert phases == [1.0 + 0.0j, -1.0 + 0.0j, 1.0j, -1.0j]
        # the two real phases exchange the roles of the charge structures
        assert rep.scan[0].identity_ratio == pytest.approx(2.0, abs=1e-12)
        assert rep.scan[1].sigma3_ratio == pytest.approx(2.0, abs=1e-12)

    def test_normalized_scale(self):
        rep = twofold_check(H("3/2"), H("1/2"), H("1/2"))
        # unit-normalized spinors halve the printed-convention ratios
        assert rep.normalized_ratio_scale == 0.5

    def test_validation(self):
        with pytest.raises(DomainError, match="integer"):
            twofold_check(H("1"), H("1/2"), H("1/2"))
        with pytest.raises(DomainError, match="at least"):
            twofold_check(H("1/2"), H("1/2"), H("3/2"))
        with pytest.raises(DomainError, match="unimodular"):
            twofold_check(H("3/2"), H("1/2"), H("1/2"), relative_phase=2.0 + 0.0j)

    def test_integer_mu_has_no_twofold_split(self):
        # mu = 0 spinors pair a state with itself, both operators act alike
        rep = twofold_check(H("2"), H("1"), H("0"))
        assert rep.requested.identity_ratio == pytest.approx(2.0, abs=1e-12)
        assert rep.requested.sigma3_ratio == pytest.approx(0.0, abs=1e-12)
