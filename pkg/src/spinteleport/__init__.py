"""Entanglement teleportation through thermal two-spin Heisenberg XXX chains."""

__version__ = "0.1.0"

from .critical import (  # noqa: E402
    BoundaryKind,
    BoundaryPoint,
    bisect,
    critical_field_entanglement,
    critical_field_fidelity,
    fidelity_minimum_field,
)
from .holevo import MutualInfoResult, SignalEnsemble, mutual_information, signal_states  # noqa: E402
from .linalg import (  # noqa: E402
    EigenDecomposition,
    hermitian_eigen,
    partial_transpose_second,
    tensor_product,
    von_neumann_entropy,
)
from .teleportation import (  # noqa: E402
    InputState,
    TeleportOutcome,
    apply_channel,
    average_fidelity_closed,
    average_fidelity_quadrature,
    fidelity,
    input_state,
    output_negativity_closed,
    teleport,
    weak_coupling_fidelity,
)
from .thermal import (  # noqa: E402
    T_FLOOR,
    ChainParams,
    PauliProbabilities,
    critical_temperature,
    hamiltonian,
    negativity,
    pauli_probabilities,
    thermal_negativity_closed,
    thermal_state,
    thermal_state_oracle,
)
