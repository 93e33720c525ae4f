"""Noisy generalized Grover search on two qubits."""
from .channels import KrausChannel, amplitude_damping, apply_channel, damped_state, phase_damping
from .core import (
    GateParameter,
    apply_oracle,
    baseline_grover,
    concurrence_to_alpha,
    grover_pure_pipeline,
    make_diffusion,
    make_u_gate,
    prepare_superposition,
)
from .errors import NumericalFailure
from .linalg import BACKEND, eig_general_4x4, eig_sym_3x3, hs_norm, kron
from .measures import (
    BlochDecomposition,
    bloch_decompose,
    concurrence_mixed,
    concurrence_pure,
    final_probabilities,
    geometric_discord,
)

__version__ = "0.1.0"
