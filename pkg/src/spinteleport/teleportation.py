"""Two-qubit teleportation through a pair of Pauli channels.

Each qubit of the input travels through its own chain; standard
teleportation over a mixed resource acts on that qubit as a Pauli channel
whose weights are the resource's Bell-basis populations.  Input states are
``cos(theta/2)|00> + sin(theta/2) e^{i phi}|11>``.
"""
from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError
from .linalg import PAULIS, projector, tensor_product, validate_density_matrix
from .thermal import (
    T_FLOOR,
    ChainParams,
    PauliProbabilities,
    boltzmann_weights,
    negativity,
    thermal_pauli_probabilities,
)

DEFAULT_QUADRATURE_ORDER = 16
_TWO_PI = 2.0 * math.pi
_PAIR_UNITARIES = np.array([tensor_product(si, sj) for si in PAULIS for sj in PAULIS])


@dataclass(frozen=True)
class InputState:
    theta: float
    phi: float

    def __post_init__(self):
        _check_angles(self.theta, self.phi)

    @property
    def vector(self) -> np.ndarray:
        return input_state(self.theta, self.phi)

    @property
    def entanglement(self) -> float:
        return input_entanglement(self.theta)


@dataclass(frozen=True)
class TeleportOutcome:
    rho_out: np.ndarray
    fidelity: float
    e_out: float


def _check_angles(theta, phi):
    if not 0.0 <= theta <= math.pi:
        raise DomainError(f"theta must lie in [0, pi], got {theta}")
    if not 0.0 <= phi < _TWO_PI:
        raise DomainError(f"phi must lie in [0, 2 pi), got {phi}")


def input_state(theta: float, phi: float) -> np.ndarray:
    _check_angles(theta, phi)
    return np.array(
        [math.cos(theta / 2), 0.0, 0.0, math.sin(theta / 2) * complex(math.cos(phi), math.sin(phi))],
        dtype=complex,
    )


def input_entanglement(theta: float) -> float:
    """Negativity of the pure input, ``2|c1 c2| = sin(theta)``."""
    return abs(math.sin(theta))


def apply_channel(rho_in, probs1: PauliProbabilities, probs2: PauliProbabilities) -> np.ndarray:
    """``sum_ij p_i q_j (s_i x s_j) rho (s_i x s_j)`` for independent channels on each qubit."""
    rho = validate_density_matrix(rho_in, dim=4)
    return pauli_twirl(rho, probs1, probs2)


def pauli_twirl(rho: np.ndarray, probs1: PauliProbabilities, probs2: PauliProbabilities) -> np.ndarray:
    """:func:`apply_channel` without input validation, for states built internally."""
    weights = np.outer(probs1.as_array(), probs2.as_array()).ravel()
    out = np.einsum("k,kij,jl,kml->im", weights, _PAIR_UNITARIES, rho, _PAIR_UNITARIES.conj())
    return 0.5 * (out + out.conj().T)


def fidelity(psi_in, rho_out) -> float:
    """Overlap ``<psi|rho|psi>`` of a pure input with the channel output."""
    psi = np.asarray(psi_in, dtype=complex)
    norm = np.linalg.norm(psi)
    if abs(norm - 1.0) > 1e-10:
        raise DomainError(f"input state must be normalized, |psi| = {norm!r}")
    value = np.vdot(psi, np.asarray(rho_out) @ psi).real
    return float(min(max(value, 0.0), 1.0))


def teleport(params: ChainParams, theta: float, phi: float) -> TeleportOutcome:
    psi = input_state(theta, phi)
    probs = thermal_pauli_probabilities(params)
    rho_out = apply_channel(projector(psi), probs, probs)
    return TeleportOutcome(rho_out, fidelity(psi, rho_out), negativity(rho_out))


def output_negativity_signed(e_in: float, params: ChainParams) -> float:
    """Unclamped output entanglement; negative values mean no entanglement survives.

    Homogeneous form of ``[E_in (x-1)^2 - 4C(x+1)] / [2C + x + 1]^2``.
    """
    w = boltzmann_weights(params)
    num = e_in * (w.g - w.s) ** 2 - 2.0 * (w.a + w.d) * (w.g + w.s)
    return num / w.total**2


def output_negativity_closed(e_in: float, params: ChainParams) -> float:
    if not 0.0 <= e_in <= 1.0:
        raise DomainError(f"input entanglement must lie in [0, 1], got {e_in}")
    return max(output_negativity_signed(e_in, params), 0.0)


def average_fidelity_closed(params: ChainParams) -> float:
    w = boltzmann_weights(params)
    half_ad = 0.5 * (w.a + w.d)
    num = 2.5 * w.g**2 + 3.0 * w.g * w.s + 2.5 * w.s**2 - 2.0 * (w.g + half_ad + w.s) ** 2
    return 2.0 / 3.0 * (1.0 + num / w.total**2)


@lru_cache(maxsize=8)
def _quadrature_nodes(order: int):
    x, wx = np.polynomial.legendre.leggauss(order)
    thetas = np.arccos(np.clip(x, -1.0, 1.0))
    phis = _TWO_PI * np.arange(order) / order
    return thetas, wx, phis


def average_fidelity_quadrature(params: ChainParams, order: int = DEFAULT_QUADRATURE_ORDER) -> float:
    """Average overlap fidelity over the input family, integrated numerically.

    Gauss-Legendre in ``cos(theta)`` times the periodic trapezoid rule in
    ``phi``, each with ``order`` nodes, normalised by the sphere area 4 pi.
    Every node is a full channel evaluation; since the channel is a mixture
    of unitaries, ``<psi|out|psi> = sum_k w_k |<psi|U_k|psi>|^2``, which lets
    all nodes go through one einsum.
    """
    if isinstance(order, bool) or not isinstance(order, numbers.Integral) or order < 8:
        raise DomainError(f"quadrature order must be an integer >= 8, got {order}")
    order = int(order)
    thetas, wx, phis = _quadrature_nodes(order)
    probs = thermal_pauli_probabilities(params)
    weights = np.outer(probs.as_array(), probs.as_array()).ravel()

    th, ph = np.meshgrid(thetas, phis, indexing="ij")
    psi = np.zeros(th.shape + (4,), dtype=complex)
    psi[..., 0] = np.cos(th / 2)
    psi[..., 3] = np.sin(th / 2) * np.exp(1j * ph)
    amps = np.einsum("tpi,kij,tpj->tpk", psi.conj(), _PAIR_UNITARIES, psi)
    fid = np.clip(np.abs(amps) ** 2 @ weights, 0.0, 1.0)
    return float(wx @ fid.sum(axis=1)) * (_TWO_PI / order) / (4.0 * math.pi)


def weak_coupling_fidelity(B: float, T: float) -> float:
    """Vanishing-coupling limit of the average fidelity, ``(1/(C+1) - 1/3)^2 + 2/9``."""
    if not T > 0.0:
        raise DomainError(f"T must be > 0, got {T}")
    T = max(T, T_FLOOR)
    r = math.exp(-abs(B) / T)
    inv = 2.0 * r / (1.0 + r) ** 2  # 1 / (cosh(B/T) + 1)
    return (inv - 1.0 / 3.0) ** 2 + 2.0 / 9.0
