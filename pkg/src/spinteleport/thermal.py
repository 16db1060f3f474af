"""Two-spin Heisenberg XXX chain in a field and its thermal state.

All closed forms are evaluated through four rescaled Boltzmann weights
(see :func:`boltzmann_weights`) so nothing overflows even when ``J/T`` is
in the thousands.  With ``x = exp(2J/T)`` and ``C = cosh(B/T)`` the familiar
textbook expressions follow from

    a + d = 2 C s,    g = x s,    a d = s**2.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DomainError
from .linalg import (
    PAULIS,
    SIGMA_Z,
    IDENTITY,
    hermitian_eigen,
    hermitian_eigenvalues,
    partial_transpose_second,
    tensor_product,
    validate_density_matrix,
)

T_FLOOR = 1e-3
LN3 = math.log(3.0)

_S = 1.0 / math.sqrt(2.0)
PSI_MINUS = np.array([0, _S, -_S, 0], dtype=complex)
PHI_MINUS = np.array([_S, 0, 0, -_S], dtype=complex)
PHI_PLUS = np.array([_S, 0, 0, _S], dtype=complex)
PSI_PLUS = np.array([0, _S, _S, 0], dtype=complex)
# Bell projector paired with the Pauli correction sigma_0, sigma_x, sigma_y, sigma_z
BELL_FOR_PAULI = (PSI_MINUS, PHI_MINUS, PHI_PLUS, PSI_PLUS)


@dataclass(frozen=True)
class ChainParams:
    """Coupling ``J``, field ``B`` and temperature ``T`` (k_B = 1).

    Temperatures below :data:`T_FLOOR` are clamped to it with a warning.
    """

    J: float
    B: float
    T: float

    def __post_init__(self):
        for name in ("J", "B", "T"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise DomainError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)
        if self.J <= 0.0:
            raise DomainError(f"J must be > 0 (antiferromagnetic regime), got {self.J}")
        if self.B < 0.0:
            raise DomainError(f"B must be >= 0, got {self.B}")
        if self.T <= 0.0:
            raise DomainError(f"T must be > 0, got {self.T}")
        if self.T < T_FLOOR:
            warnings.warn(f"T={self.T} below floor, clamped to {T_FLOOR}", RuntimeWarning, stacklevel=3)
            object.__setattr__(self, "T", T_FLOOR)

    def scaled(self, factor: float) -> "ChainParams":
        return ChainParams(self.J * factor, self.B * factor, self.T * factor)


@dataclass(frozen=True)
class PauliProbabilities:
    p0: float
    px: float
    py: float
    pz: float

    def __post_init__(self):
        values = self.as_array()
        if np.any(values < 0.0) or not np.all(np.isfinite(values)):
            raise DomainError(f"Pauli probabilities must be non-negative, got {values}")
        if abs(values.sum() - 1.0) > 1e-12:
            raise DomainError(f"Pauli probabilities sum to {values.sum()!r}, expected 1")

    def as_array(self) -> np.ndarray:
        return np.array([self.p0, self.px, self.py, self.pz], dtype=float)

    @classmethod
    def from_sequence(cls, values) -> "PauliProbabilities":
        return cls(*(float(v) for v in values))


IDENTITY_CHANNEL = PauliProbabilities(1.0, 0.0, 0.0, 0.0)
DEPOLARIZING_CHANNEL = PauliProbabilities(0.25, 0.25, 0.25, 0.25)


class BoltzmannWeights(NamedTuple):
    """Rescaled Boltzmann factors of the four eigenlevels.

    ``a`` is |00> (energy B + J/2), ``d`` is |11> (energy -B + J/2), ``s``
    the triplet |psi+> (J/2) and ``g`` the singlet (-3J/2).  All four are
    divided by ``exp(shift)``, where ``shift`` is the largest exponent, so
    the largest weight is exactly 1.
    """

    a: float
    d: float
    s: float
    g: float
    shift: float

    @property
    def total(self) -> float:
        return self.a + self.d + self.s + self.g


def boltzmann_weights(params: ChainParams) -> BoltzmannWeights:
    J, B, T = params.J, params.B, params.T
    exps = ((-B - 0.5 * J) / T, (B - 0.5 * J) / T, -0.5 * J / T, 1.5 * J / T)
    m = max(exps)
    a, d, s, g = (math.exp(e - m) for e in exps)
    return BoltzmannWeights(a, d, s, g, m)


def hamiltonian(params: ChainParams) -> np.ndarray:
    """``(B/2)(Z1 + Z2) + (J/2)(X X + Y Y + Z Z)`` as a 4x4 matrix."""
    zeeman = tensor_product(SIGMA_Z, IDENTITY) + tensor_product(IDENTITY, SIGMA_Z)
    exchange = sum(tensor_product(s, s) for s in PAULIS[1:])
    return 0.5 * params.B * zeeman + 0.5 * params.J * exchange


def thermal_state(params: ChainParams) -> np.ndarray:
    """Closed-form Gibbs state in the computational basis."""
    w = boltzmann_weights(params)
    z = w.total
    diag = 0.5 * (w.s + w.g) / z
    coh = 0.5 * (w.s - w.g) / z
    return np.array(
        [
            [w.a / z, 0, 0, 0],
            [0, diag, coh, 0],
            [0, coh, diag, 0],
            [0, 0, 0, w.d / z],
        ],
        dtype=complex,
    )


def _spectral_weights(params: ChainParams):
    levels, vectors = hermitian_eigen(hamiltonian(params))
    shifted = -(levels - levels[0]) / params.T
    return levels, vectors, np.exp(shifted)


def thermal_state_oracle(params: ChainParams) -> np.ndarray:
    """Gibbs state ``exp(-H/T)/z`` built from the eigendecomposition of H.

    Independent of :func:`thermal_state`: it never uses the closed form,
    only the numerical spectrum of :func:`hamiltonian`.
    """
    _, vectors, weights = _spectral_weights(params)
    rho = (vectors * (weights / weights.sum())) @ vectors.conj().T
    return 0.5 * (rho + rho.conj().T)


def log_partition_function(params: ChainParams) -> float:
    levels, _, weights = _spectral_weights(params)
    return float(-levels[0] / params.T + math.log(weights.sum()))


def partition_function(params: ChainParams) -> float:
    """``tr exp(-H/T)``; ``inf`` when it exceeds the double range."""
    try:
        return math.exp(log_partition_function(params))
    except OverflowError:
        return math.inf


def negativity(rho) -> float:
    """``max(-2 * sum of negative eigenvalues of rho^{T_2}, 0)``."""
    rho = validate_density_matrix(rho, dim=4)
    w = hermitian_eigenvalues(partial_transpose_second(rho))
    return max(-2.0 * float(w[w < 0.0].sum()), 0.0)


def critical_temperature(J: float) -> float:
    """Temperature ``2J/ln 3`` above which the thermal state is separable."""
    if not J > 0.0:
        raise DomainError(f"J must be > 0, got {J}")
    return 2.0 * J / LN3


def thermal_negativity_closed(params: ChainParams) -> float:
    """Closed-form thermal entanglement.

    The usual expression ``2 e^{-J/2T} C / z * (sqrt(1 + ((x-1)^2 - 4)/(4 C^2)) - 1)``
    is multiplied through by ``(a + d) = 2 C s`` so it stays finite when
    ``C`` underflows relative to the singlet weight.  Returns exactly 0 for
    ``T >= 2J/ln 3``.
    """
    if params.T >= critical_temperature(params.J):
        return 0.0
    w = boltzmann_weights(params)
    ad = w.a + w.d
    radicand = max(ad * ad + (w.g - w.s) ** 2 - 4.0 * w.s * w.s, 0.0)
    return max((math.sqrt(radicand) - ad) / w.total, 0.0)


def pauli_probabilities(rho) -> PauliProbabilities:
    """Bell-basis populations of a resource state, ordered as Pauli corrections.

    ``p0 = <psi-|rho|psi->``, ``px = <phi-|rho|phi->``, ``py = <phi+|rho|phi+>``,
    ``pz = <psi+|rho|psi+>``.
    """
    rho = validate_density_matrix(rho, dim=4)
    values = np.array([np.vdot(b, rho @ b).real for b in BELL_FOR_PAULI])
    values = np.where((values < 0.0) & (values > -1e-12), 0.0, values)
    return PauliProbabilities.from_sequence(values / values.sum())


def thermal_pauli_probabilities(params: ChainParams) -> PauliProbabilities:
    return pauli_probabilities(thermal_state(params))
