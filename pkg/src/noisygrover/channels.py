"""Single-qubit damping channels in Kraus form, lifted onto two qubits."""
import math
from dataclasses import dataclass

import numpy as np

from .linalg import dagger, kron

TARGETS = ("first", "second")
KINDS = ("amplitude", "phase")

_I2 = np.eye(2, dtype=complex)


@dataclass(frozen=True)
class KrausChannel:
    kind: str
    p: float
    operators: tuple

    def completeness_error(self):
        total = sum(dagger(e) @ e for e in self.operators)
        return float(np.max(np.abs(total - _I2)))


def _check_p(p):
    if not (0.0 <= p <= 1.0):
        raise ValueError("damping probability must lie in [0, 1], got %r" % (p,))
    return float(p)


def amplitude_damping(p):
    """Decay |1> -> |0> with probability p.

    E1 = [[0, sqrt(p)], [0, 0]]; a 1 in the top-left corner would break
    completeness.
    """
    p = _check_p(p)
    e0 = np.array([[1.0, 0.0], [0.0, math.sqrt(1.0 - p)]], dtype=complex)
    e1 = np.array([[0.0, math.sqrt(p)], [0.0, 0.0]], dtype=complex)
    return KrausChannel("amplitude", p, (e0, e1))


def phase_damping(p):
    p = _check_p(p)
    e0 = np.array([[1.0, 0.0], [0.0, math.sqrt(1.0 - p)]], dtype=complex)
    e1 = np.array([[0.0, 0.0], [0.0, math.sqrt(p)]], dtype=complex)
    return KrausChannel("phase", p, (e0, e1))


def make_channel(kind, p):
    if kind == "amplitude":
        return amplitude_damping(p)
    if kind == "phase":
        return phase_damping(p)
    raise ValueError("channel kind must be 'amplitude' or 'phase', got %r" % (kind,))


def lift(op, target):
    if target == "second":
        return kron(_I2, op)
    if target == "first":
        return kron(op, _I2)
    raise ValueError("target must be 'first' or 'second', got %r" % (target,))


def apply_channel(rho, channel, target="second"):
    """Kraus sum over the lifted operators on a two-qubit density matrix."""
    rho = np.asarray(rho, dtype=complex)
    out = np.zeros((4, 4), dtype=complex)
    for e in channel.operators:
        k = lift(e, target)
        out += k @ rho @ dagger(k)
    return out


def apply_single_qubit(rho, channel):
    rho = np.asarray(rho, dtype=complex)
    return sum(e @ rho @ dagger(e) for e in channel.operators)


def damped_state(param, channel=None, target="second", marked=None):
    """Post-oracle state of the generalized iterate, optionally passed through ``channel``."""
    from .core import DEFAULT_MARKED, apply_oracle, prepare_superposition

    psi = apply_oracle(prepare_superposition(param), DEFAULT_MARKED if marked is None else marked)
    rho = np.outer(psi, psi.conj())
    if channel is None:
        return rho
    return apply_channel(rho, channel, target)
