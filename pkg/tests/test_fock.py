"""
Tests for out-basis Fock expansions, Bell states and state dumps.
"""

import json
import math

import pytest

from accel_ent.bogoliubov import Statistics
from accel_ent.errors import MixedStatisticsError, ParameterDomainError
from accel_ent.fock import (
    SLOTS,
    FockVector,
    Mode,
    SlotLabel,
    SpecKind,
    StateDump,
    StateSpec,
    build_bell_out,
    fermion_out_one,
    fermion_out_vacuum,
    mode_slots,
    one_particle_cutoff,
    one_particle_tail,
    restriction_params,
    scalar_out_one,
    scalar_out_vacuum,
    scalar_restricted_one,
    scalar_restricted_vacuum,
    truncation_cutoff,
    vacuum_tail,
)


class TestFockVector:
    """Tests for FockVector construction and algebra."""

    def test_fermion_occupancy_limit(self) -> None:
        """Test that fermion vectors reject occupations above one."""
        with pytest.raises(ParameterDomainError):
            FockVector(
                statistics=Statistics.FERMION,
                slots=mode_slots(Mode.S),
                amplitudes={(2, 0): 1.0},
                occupancy_limit=2,
            )

    def test_wrong_arity(self) -> None:
        """Test that occupation tuples must match the slots."""
        with pytest.raises(ParameterDomainError):
            FockVector(
                statistics=Statistics.SCALAR,
                slots=mode_slots(Mode.S),
                amplitudes={(0, 0, 0): 1.0},
                occupancy_limit=1,
            )

    def test_zero_amplitudes_dropped(self) -> None:
        """Test that exact zeros are not stored."""
        vec = FockVector(
            statistics=Statistics.SCALAR,
            slots=mode_slots(Mode.S),
            amplitudes={(0, 0): 1.0, (1, 1): 0.0},
            occupancy_limit=1,
        )
        assert len(vec) == 1

    def test_tensor_slots_and_statistics(self) -> None:
        """Test slot concatenation and the mixed-statistics guard."""
        left = fermion_out_vacuum(0.3, Mode.S)
        right = fermion_out_vacuum(0.3, Mode.OMEGA)
        product = left.tensor(right)
        assert product.slots == SLOTS
        assert product.norm_squared() == pytest.approx(1.0)
        with pytest.raises(MixedStatisticsError):
            left.tensor(scalar_out_vacuum(0.3, mode=Mode.OMEGA))

    def test_superpose_requires_disjoint_support(self) -> None:
        """Test that overlapping branches are rejected."""
        vac = fermion_out_vacuum(0.3)
        with pytest.raises(ParameterDomainError):
            vac.superpose(vac)

    def test_slot_parse(self) -> None:
        """Test slot labels round-trip through their names."""
        for slot in SLOTS:
            assert SlotLabel.parse(str(slot)) == slot
        with pytest.raises(ValueError, match="Valid"):
            SlotLabel.parse("x_p")


class TestExpansions:
    """Tests for single-mode out-basis expansions."""

    def test_fermion_vacuum(self) -> None:
        """Test cos(r_f)|00> - sin(r_f)|11>."""
        vac = fermion_out_vacuum(math.pi / 3)
        assert dict(vac.amplitudes) == pytest.approx(
            {(0, 0): 0.5, (1, 1): -math.sqrt(3.0) / 2.0}
        )
        assert fermion_out_one(math.pi / 3).records() == [((1, 0), 1.0)]

    def test_fermion_range(self) -> None:
        """Test that r_f outside [0, pi/2] raises."""
        with pytest.raises(ParameterDomainError):
            fermion_out_vacuum(2.0)

    def test_cutoff_at_infinite_acceleration(self, r_infinite: float) -> None:
        """Test N_c = 43 at asinh(1) and epsilon = 1e-12."""
        assert truncation_cutoff(r_infinite, 1e-12) == 43
        assert truncation_cutoff(0.0, 1e-12) == 0

    def test_one_particle_cutoff(self, r_infinite: float) -> None:
        """Test that the one-particle cutoff keeps its tail within epsilon."""
        cutoff = one_particle_cutoff(r_infinite, 1e-12)
        assert cutoff == 44
        assert one_particle_tail(r_infinite, cutoff) <= 1e-12
        assert one_particle_tail(r_infinite, cutoff - 1) > 1e-12
        assert one_particle_cutoff(0.0, 1e-12) == 0

    def test_cutoff_epsilon_domain(self) -> None:
        """Test that epsilon outside (0, 1) raises."""
        with pytest.raises(ParameterDomainError):
            truncation_cutoff(0.5, 1.5)

    @pytest.mark.parametrize("r", [0.1, 0.5, math.asinh(1.0)])
    def test_truncated_norms(self, r: float) -> None:
        """Test that kept mass plus the closed-form tail is one."""
        vac = scalar_out_vacuum(r)
        one = scalar_out_one(r)
        assert vac.norm_squared() + vac.truncation_tail == pytest.approx(1.0)
        assert one.norm_squared() + one.truncation_tail == pytest.approx(1.0)
        assert vac.truncation_tail <= 1e-12
        assert one.truncation_tail <= 1e-12
        assert one.truncation_tail == pytest.approx(
            one_particle_tail(r, one.cutoff or 0)
        )
        assert vac.truncation_tail == pytest.approx(vacuum_tail(r, vac.cutoff or 0))

    def test_scalar_amplitudes(self, r_infinite: float) -> None:
        """Test the first vacuum and one-particle amplitudes."""
        vac = scalar_out_vacuum(r_infinite)
        one = scalar_out_one(r_infinite)
        assert vac.amplitudes[(0, 0)] == pytest.approx(1.0 / math.sqrt(2.0))
        assert vac.amplitudes[(1, 1)] == pytest.approx(0.5)
        assert one.amplitudes[(1, 0)] == pytest.approx(0.5)
        assert one.amplitudes[(2, 1)] == pytest.approx(0.5)

    def test_restriction_params(self, r_infinite: float) -> None:
        """Test N1 = 2/sqrt(3) and N2 = 2 for M = 1 at asinh(1)."""
        params = restriction_params(r_infinite, 1)
        assert params.N1 == pytest.approx(1.154701, abs=1e-6)
        assert params.N2 == pytest.approx(2.0)

    @pytest.mark.parametrize("M", [1, 2, 5])
    def test_restricted_normalized(self, r_infinite: float, M: int) -> None:
        """Test that restricted expansions are exactly normalized."""
        assert scalar_restricted_vacuum(r_infinite, M).norm_squared() == pytest.approx(
            1.0
        )
        assert scalar_restricted_one(r_infinite, M).norm_squared() == pytest.approx(
            1.0
        )

    def test_restricted_invalid_m(self) -> None:
        """Test that M < 1 raises."""
        with pytest.raises(ParameterDomainError):
            restriction_params(0.5, 0)


class TestBellState:
    """Tests for the two-mode Bell state in the out basis."""

    def test_inertial_pair(self) -> None:
        """Test the unaccelerated state (|0000> + |1010>)/sqrt(2)."""
        state = build_bell_out(StateSpec.inertial(), StateSpec.inertial())
        assert state.records() == [
            ((0, 0, 0, 0), pytest.approx(1.0 / math.sqrt(2.0))),
            ((1, 0, 1, 0), pytest.approx(1.0 / math.sqrt(2.0))),
        ]

    def test_fermion_normalized(self, fermion_bell: FockVector) -> None:
        """Test that fermion Bell states are normalized and untruncated."""
        assert fermion_bell.norm_squared() == pytest.approx(1.0)
        assert fermion_bell.truncation_tail == 0.0

    def test_scalar_tail(self, r_infinite: float) -> None:
        """Test that truncated scalar Bell states record their tail."""
        state = build_bell_out(StateSpec.inertial(), StateSpec.scalar(r_infinite))
        assert state.norm_squared() + state.truncation_tail == pytest.approx(
            1.0, abs=1e-13
        )
        assert state.negativity_error > 0.0
        assert state.cutoff == 44

    def test_mixed_statistics(self) -> None:
        """Test that fermion and scalar modes cannot be combined."""
        with pytest.raises(MixedStatisticsError):
            build_bell_out(StateSpec.fermion(0.2), StateSpec.scalar(0.2))


class TestStateSpec:
    """Tests for StateSpec parsing."""

    @pytest.mark.parametrize(
        ("text", "kind"),
        [
            ("inertial", SpecKind.INERTIAL),
            ("fermion:0.5", SpecKind.FERMION),
            ("scalar:0.5", SpecKind.SCALAR),
            ("scalar:0.5:1e-8", SpecKind.SCALAR),
            ("restricted:0.5:2", SpecKind.SCALAR_RESTRICTED),
        ],
    )
    def test_parse(self, text: str, kind: SpecKind) -> None:
        """Test every spec form."""
        assert StateSpec.parse(text).kind is kind

    def test_parse_values(self) -> None:
        """Test parsed parameters."""
        spec = StateSpec.parse("scalar:0.25:1e-8")
        assert spec.r == 0.25
        assert spec.epsilon == 1e-8
        assert StateSpec.parse("restricted:0.5:3").M == 3

    @pytest.mark.parametrize("text", ["boson:1", "fermion", "restricted:0.5"])
    def test_parse_errors(self, text: str) -> None:
        """Test malformed specs."""
        with pytest.raises(ValueError):
            StateSpec.parse(text)


class TestStateDump:
    """Tests for the JSON state dump."""

    def test_dump(self, fermion_bell: FockVector) -> None:
        """Test that the dump lists every amplitude in slot order."""
        payload = json.loads(StateDump.from_state(fermion_bell).to_json())
        assert payload["statistics"] == "fermion"
        assert payload["slots"] == ["s_p", "s_a", "omega_p", "omega_a"]
        assert len(payload["amplitudes"]) == len(fermion_bell)
        first = payload["amplitudes"][0]
        assert first["occupations"] == [0, 0, 0, 0]
        assert first["amplitude"] == pytest.approx(
            math.cos(math.pi / 6) / math.sqrt(2.0)
        )
