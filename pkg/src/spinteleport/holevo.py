"""Mutual information of a four-signal ensemble sent through two chain uses."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .linalg import entropy_from_spectrum, hermitian_eigenvalues, projector, von_neumann_entropy
from .teleportation import pauli_twirl
from .thermal import ChainParams, PauliProbabilities, thermal_pauli_probabilities

PRIORS = (0.25, 0.25, 0.25, 0.25)
_CLAMP = 1e-12


def signal_states(gamma: float, beta: float) -> np.ndarray:
    """Rows are the four orthonormal signals.

    Two live in span{|00>, |11>} with mixing angle ``gamma``, two in
    span{|01>, |10>} with mixing angle ``beta``.
    """
    cg, sg = math.cos(gamma), math.sin(gamma)
    cb, sb = math.cos(beta), math.sin(beta)
    return np.array(
        [
            [cg, 0, 0, sg],
            [sg, 0, 0, -cg],
            [0, cb, sb, 0],
            [0, sb, -cb, 0],
        ],
        dtype=complex,
    )


@dataclass(frozen=True)
class SignalEnsemble:
    gamma: float
    beta: float
    priors: tuple = field(default=PRIORS)

    def states(self) -> np.ndarray:
        return signal_states(self.gamma, self.beta)


@dataclass(frozen=True)
class MutualInfoResult:
    """``value`` uses the shortcut ``2 - mean entropy``; ``holevo_chi`` the full definition.

    Both are in bits and agree whenever the average output is maximally mixed.
    """

    value: float
    per_signal_entropies: tuple
    average_state_entropy: float
    holevo_chi: float


def _output_spectrum(chi: np.ndarray) -> np.ndarray:
    xi = hermitian_eigenvalues(chi)
    return np.where((xi < 0.0) & (xi >= -_CLAMP), 0.0, xi)


def mutual_information_from_probs(probs: PauliProbabilities, gamma: float, beta: float) -> MutualInfoResult:
    outputs = [pauli_twirl(projector(v), probs, probs) for v in signal_states(gamma, beta)]
    spectra = [_output_spectrum(chi) for chi in outputs]
    xi = np.concatenate(spectra)
    xi = xi[xi > 0.0]
    value = 2.0 + 0.25 * float(np.sum(xi * np.log2(xi)))

    per_signal = tuple(entropy_from_spectrum(w) for w in spectra)
    average = sum(q * chi for q, chi in zip(PRIORS, outputs))
    s_avg = von_neumann_entropy(average)
    chi_value = s_avg - sum(q * s for q, s in zip(PRIORS, per_signal))
    return MutualInfoResult(value, per_signal, s_avg, chi_value)


def mutual_information(params: ChainParams, gamma: float, beta: float) -> MutualInfoResult:
    """Mutual information with both chain uses at the same ``(J, B, T)``."""
    return mutual_information_from_probs(thermal_pauli_probabilities(params), gamma, beta)

