"""
Tests for the analytic logarithmic negativities and their agreement with
the generic density-matrix pipeline.
"""

import math
from dataclasses import replace

import pytest

from accel_ent.entanglement import (
    Scenario,
    entanglement_report,
    fermion_closed_forms,
    restricted_ln_sa,
    restricted_ln_sp,
    scalar_closed_forms,
    scalar_series_ln_sp,
)
from accel_ent.errors import ConvergenceError, ParameterDomainError
from accel_ent.fock import StateSpec, build_bell_out
from accel_ent.settings import NumericSettings


class TestScenario:
    """Tests for Scenario parsing."""

    @pytest.mark.parametrize(
        ("value", "expected"),
        [
            ("one", Scenario.ONE),
            ("BOTH", Scenario.BOTH),
            ("both_accelerated", Scenario.BOTH),
            ("one_accelerated", Scenario.ONE),
        ],
    )
    def test_parse(self, value: str, expected: Scenario) -> None:
        """Test accepted spellings."""
        assert Scenario.parse(value) is expected

    def test_parse_unknown(self) -> None:
        """Test that an unknown scenario lists the valid ones."""
        with pytest.raises(ValueError, match="Valid"):
            Scenario.parse("neither")


class TestFermionForms:
    """Tests for the fermion closed forms."""

    def test_one_accelerated_values(self) -> None:
        """Test the values at r_f = pi/4."""
        forms = fermion_closed_forms(math.pi / 4)
        assert forms["LN_total"] == 1.0
        assert forms["LN_sp"] == pytest.approx(math.log2(1.5))
        assert forms["LN_sa"] == pytest.approx(math.log2(1.5))
        assert set(forms) == {"LN_total", "LN_sp", "LN_sa"}

    @pytest.mark.parametrize("r_f", [0.0, 0.4, 1.0, math.pi / 2])
    def test_species_negativities_add_up(self, r_f: float) -> None:
        """Test N_sp + N_sa = 1/2 for every r_f."""
        forms = fermion_closed_forms(r_f)
        n_sp = (2.0 ** forms["LN_sp"] - 1.0) / 2.0
        n_sa = (2.0 ** forms["LN_sa"] - 1.0) / 2.0
        assert n_sp + n_sa == pytest.approx(0.5)

    def test_both_accelerated(self) -> None:
        """Test LN_pp = log2(5/4) and LN_pa = LN_ap at r_f = pi/4."""
        forms = fermion_closed_forms(math.pi / 4, Scenario.BOTH)
        assert forms["LN_pp"] == pytest.approx(0.321928, abs=1e-6)
        assert forms["LN_aa"] == pytest.approx(forms["LN_pp"])
        assert forms["LN_pa"] == forms["LN_ap"]
        assert len(forms) == 5

    def test_limits(self) -> None:
        """Test the inertial and infinite-acceleration endpoints."""
        inertial = fermion_closed_forms(0.0)
        assert inertial["LN_sp"] == 1.0
        assert inertial["LN_sa"] == 0.0
        both = fermion_closed_forms(math.pi / 2, "both")
        assert both["LN_aa"] == pytest.approx(1.0)
        assert both["LN_pp"] == pytest.approx(0.0, abs=1e-15)

    def test_out_of_range(self) -> None:
        """Test that r_f above pi/2 raises."""
        with pytest.raises(ParameterDomainError):
            fermion_closed_forms(1.7)


class TestScalarSeries:
    """Tests for the unrestricted scalar series."""

    def test_inertial_limit(self) -> None:
        """Test LN_sp = 1 at r = 0."""
        assert scalar_series_ln_sp(0.0) == (1.0, 0.0, 0)

    def test_remainder_bound(self, r_infinite: float) -> None:
        """Test that the remainder bound is tiny at the default tolerance."""
        forms = scalar_closed_forms(r_infinite)
        assert 0.0 <= forms.error_bound <= 1e-6
        assert forms.terms > 10
        assert forms["LN_sa"] == 0.0

    def test_decreasing(self) -> None:
        """Test that LN_sp decreases with the squeezing parameter."""
        values = [scalar_series_ln_sp(r)[0] for r in (0.1, 0.4, 0.7, math.asinh(1.0))]
        assert values == sorted(values, reverse=True)
        assert 0.0 < values[-1] < 1.0

    def test_term_cap(self, r_infinite: float) -> None:
        """Test that the term cap raises ConvergenceError."""
        settings = replace(NumericSettings(), series_max_terms=3)
        with pytest.raises(ConvergenceError):
            scalar_series_ln_sp(r_infinite, settings)

    @pytest.mark.parametrize("r", [0.3, 0.6, math.asinh(1.0)])
    def test_matches_pipeline(self, r: float) -> None:
        """Test the series against the truncated-state partial transpose."""
        state = build_bell_out(StateSpec.inertial(), StateSpec.scalar(r))
        report = entanglement_report(state, "s|omega_p")
        ln_sp, bound, _ = scalar_series_ln_sp(r)
        assert report.log_negativity == pytest.approx(
            ln_sp, abs=1e-8 + bound + report.truncation_error
        )

    @pytest.mark.parametrize("r", [0.3, math.asinh(1.0)])
    def test_antiparticles_separable(self, r: float) -> None:
        """Test that the s|omega_a split carries no entanglement."""
        state = build_bell_out(StateSpec.inertial(), StateSpec.scalar(r))
        report = entanglement_report(state, "s|omega_a")
        assert report.log_negativity <= report.truncation_error + 1e-12


class TestRestrictedForms:
    """Tests for the pair-restricted scalar closed forms."""

    def test_one_pair(self, r_infinite: float) -> None:
        """Test LN_sa = log2(4/3) and LN_sp = log2(5/3) for M = 1."""
        assert restricted_ln_sa(r_infinite, 1) == pytest.approx(
            math.log2(4.0 / 3.0), abs=1e-12
        )
        assert restricted_ln_sp(r_infinite, 1) == pytest.approx(
            math.log2(5.0 / 3.0), abs=1e-12
        )

    def test_two_pairs(self, r_infinite: float) -> None:
        """Test LN_sa for M = 2 at infinite acceleration."""
        assert restricted_ln_sa(r_infinite, 2) == pytest.approx(0.21437, abs=1e-5)

    def test_decays_with_pairs(self, r_infinite: float) -> None:
        """Test that LN_sa falls below 0.01 by M = 10."""
        values = [restricted_ln_sa(r_infinite, m) for m in range(1, 11)]
        assert all(a > b for a, b in zip(values, values[1:], strict=False))
        assert values[-1] < 0.01

    def test_invalid_pairs(self, r_infinite: float) -> None:
        """Test that M = 0 raises."""
        with pytest.raises(ParameterDomainError):
            restricted_ln_sa(r_infinite, 0)

    @pytest.mark.parametrize("M", [1, 2, 3, 6])
    @pytest.mark.parametrize("r", [0.4, math.asinh(1.0)])
    def test_matches_pipeline(self, r: float, M: int) -> None:
        """Test both closed forms against the restricted-state pipeline."""
        state = build_bell_out(StateSpec.inertial(), StateSpec.restricted(r, M))
        forms = scalar_closed_forms(r, M)
        for label, name in [("LN_sp", "s|omega_p"), ("LN_sa", "s|omega_a")]:
            report = entanglement_report(state, name)
            assert report.log_negativity == pytest.approx(forms[label], abs=1e-10)
        assert forms.error_bound == 0.0
