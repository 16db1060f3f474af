import math
import warnings

import numpy as np
import pytest

from spinteleport.errors import DomainError, InvalidStateError
from spinteleport.linalg import SIGMA_X, SIGMA_Y, SIGMA_Z, IDENTITY, hermitian_eigen, projector, tensor_product
from spinteleport.thermal import (
    BELL_FOR_PAULI,
    PHI_PLUS,
    PSI_MINUS,
    T_FLOOR,
    ChainParams,
    PauliProbabilities,
    critical_temperature,
    hamiltonian,
    log_partition_function,
    negativity,
    partition_function,
    pauli_probabilities,
    thermal_negativity_closed,
    thermal_state,
    thermal_state_oracle,
)

from . import oracles
from .conftest import REFERENCE_T

REFERENCE = ChainParams(1.0, 0.0, REFERENCE_T)
GRID = [
    ChainParams(J, B, T)
    for J in np.linspace(0.1, 2, 10)
    for B in np.linspace(0, 2, 10)
    for T in np.linspace(0.1, 2, 10)
]


class TestChainParams:
    def test_clamps_low_temperature(self):
        with pytest.warns(RuntimeWarning):
            p = ChainParams(1.0, 0.0, 1e-5)
        assert p.T == T_FLOOR

    @pytest.mark.parametrize("J,B,T", [(0.0, 0.0, 1.0), (-1.0, 0.0, 1.0), (1.0, -0.1, 1.0), (1.0, 0.0, 0.0),
                                       (1.0, math.nan, 1.0)])
    def test_rejects_out_of_domain(self, J, B, T):
        with pytest.raises(DomainError):
            ChainParams(J, B, T)

    def test_pauli_probabilities_validate(self):
        with pytest.raises(DomainError):
            PauliProbabilities(0.5, 0.5, 0.5, -0.5)
        with pytest.raises(DomainError):
            PauliProbabilities(0.5, 0.1, 0.1, 0.1)


class TestHamiltonian:
    def test_explicit_form(self):
        J, B = 0.7, 0.3
        expected = np.array(
            [[B + J / 2, 0, 0, 0], [0, -J / 2, J, 0], [0, J, -J / 2, 0], [0, 0, 0, -B + J / 2]]
        )
        assert np.allclose(hamiltonian(ChainParams(J, B, 1.0)), expected, atol=1e-15)
        assert np.allclose(hamiltonian(ChainParams(J, B, 1.0)), oracles.hamiltonian_dense(J, B), atol=1e-15)

    def test_zero_field_blocks(self):
        h = hamiltonian(ChainParams(1.0, 0.0, 1.0)).real
        assert np.allclose(h[1:3, 1:3], [[-0.5, 1.0], [1.0, -0.5]])
        assert h[0, 0] == h[3, 3] == 0.5

    def test_singlet_eigenvalue(self):
        h = hamiltonian(ChainParams(1.0, 0.0, 1.0))
        assert np.allclose(h @ PSI_MINUS, -1.5 * PSI_MINUS, atol=1e-15)


class TestThermalState:
    def test_reference_values(self):
        rho = thermal_state(REFERENCE)
        expected = np.zeros((4, 4))
        expected[0, 0] = expected[3, 3] = 1 / 84
        expected[1, 1] = expected[2, 2] = 41 / 84
        expected[1, 2] = expected[2, 1] = -40 / 84
        assert np.max(np.abs(rho - expected)) <= 1e-15

    def test_partition_function(self):
        assert partition_function(REFERENCE) == pytest.approx(28.0, rel=1e-13)

    def test_high_temperature_limit(self):
        assert np.max(np.abs(thermal_state(ChainParams(1.3, 0.4, 1e6)) - np.eye(4) / 4)) <= 1e-5

    def test_ground_state_limit(self):
        rho = thermal_state(ChainParams(1.0, 0.0, 0.001))
        assert np.max(np.abs(rho - projector(PSI_MINUS))) <= 1e-10

    def test_no_overflow_at_floor(self):
        for J, B in [(3.0, 0.0), (3.0, 3.0), (0.05, 3.0)]:
            rho = thermal_state(ChainParams(J, B, T_FLOOR))
            assert np.all(np.isfinite(rho))
            assert np.trace(rho).real == pytest.approx(1.0, abs=1e-12)
            assert np.isfinite(log_partition_function(ChainParams(J, B, T_FLOOR)))

    def test_oracle_well_formed(self):
        rho = thermal_state_oracle(ChainParams(1.0, 2.0, 1.0))
        assert np.max(np.abs(rho - rho.conj().T)) <= 1e-15
        assert np.trace(rho).real == pytest.approx(1.0, abs=1e-12)
        assert hermitian_eigen(rho).eigenvalues[0] >= -1e-15

    @pytest.mark.parametrize("params", GRID[::37])
    def test_closed_form_against_expm(self, params):
        # third route: scipy's Pade matrix exponential
        ref = oracles.gibbs_expm(params.J, params.B, params.T)
        assert np.max(np.abs(thermal_state(params) - ref)) <= 1e-10


class TestNegativity:
    def test_bell_state(self):
        assert negativity(projector(PHI_PLUS)) == pytest.approx(1.0, abs=1e-12)

    def test_maximally_mixed(self):
        assert negativity(np.eye(4) / 4) == 0.0

    def test_reference_value(self):
        assert negativity(thermal_state(REFERENCE)) == pytest.approx(13 / 14, abs=1e-12)
        assert thermal_negativity_closed(REFERENCE) == pytest.approx(13 / 14, abs=1e-12)

    def test_rejects_non_state(self):
        with pytest.raises(InvalidStateError):
            negativity(np.diag([0.6, 0.6, -0.1, -0.1]))

    def test_zero_at_critical_temperature(self):
        assert thermal_negativity_closed(ChainParams(1.0, 0.0, 2 / math.log(3))) == 0.0

    def test_matches_lapack_oracle(self):
        for params in GRID[::11]:
            rho = thermal_state(params)
            assert negativity(rho) == pytest.approx(oracles.negativity_lapack(rho), abs=1e-12)

    @pytest.mark.parametrize("J", [0.3, 1.0, 2.0])
    def test_non_increasing_in_field_below_tc(self, J):
        for frac in (0.2, 0.5, 0.9):
            T = frac * critical_temperature(J)
            values = [thermal_negativity_closed(ChainParams(J, B, T)) for B in np.linspace(0, 3, 61)]
            assert np.all(np.diff(values) <= 1e-12)

    def test_zero_above_tc_for_any_field(self):
        for J in (0.2, 1.0, 2.5):
            tc = critical_temperature(J)
            for T in (tc, 1.2 * tc, 3 * tc):
                for B in (0.0, 0.5, 5.0):
                    assert thermal_negativity_closed(ChainParams(J, B, T)) == 0.0


class TestCriticalTemperature:
    def test_values(self):
        assert critical_temperature(1.0) == pytest.approx(1.8204784532536746, rel=1e-15)
        assert critical_temperature(2.0) == pytest.approx(3.640956906507349, rel=1e-15)
        assert critical_temperature(math.log(3) / 2) == pytest.approx(1.0, rel=1e-15)

    @pytest.mark.parametrize("J", [0.0, -1.0])
    def test_domain(self, J):
        with pytest.raises(DomainError):
            critical_temperature(J)


class TestPauliProbabilities:
    def test_singlet_is_perfect_channel(self):
        p = pauli_probabilities(projector(PSI_MINUS))
        assert np.allclose(p.as_array(), [1, 0, 0, 0], atol=1e-15)

    def test_maximally_mixed_is_depolarizing(self):
        assert np.allclose(pauli_probabilities(np.eye(4) / 4).as_array(), 0.25)

    def test_reference_values(self):
        p = pauli_probabilities(thermal_state(REFERENCE))
        assert np.allclose(p.as_array(), np.array([81, 1, 1, 1]) / 84, atol=1e-15)
        assert p.as_array().sum() == pytest.approx(1.0, abs=1e-12)

    def test_matches_independent_projection(self):
        for params in GRID[::53]:
            rho = thermal_state(params)
            assert np.allclose(pauli_probabilities(rho).as_array(), oracles.bell_probs(rho), atol=1e-14)

    def test_bell_projector_pairing(self):
        # (s_k x I)|psi-> must land on the Bell state paired with s_k
        for sigma, bell in zip((IDENTITY, SIGMA_X, SIGMA_Y, SIGMA_Z), BELL_FOR_PAULI):
            image = tensor_product(sigma, IDENTITY) @ PSI_MINUS
            assert abs(abs(np.vdot(bell, image)) - 1.0) <= 1e-12


def test_oracle_equivalence_full_grid():
    worst = max(np.max(np.abs(thermal_state(p) - thermal_state_oracle(p))) for p in GRID)
    assert worst <= 1e-10


def test_no_warning_at_floor():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        ChainParams(1.0, 0.0, T_FLOOR)
