"""Gates, states and the generalized two-qubit Grover iterate.

The superposition gate is the real single-qubit unitary

    U|0> = alpha|0> + beta|1>,   U|1> = beta|0> - alpha|1>,

with ``beta = +sqrt(1 - alpha**2)``.  Replacing Hadamards by ``U`` gives one
family of search circuits; ``alpha = 1/sqrt(2)`` recovers standard Grover.
"""
import math
from dataclasses import dataclass

import numpy as np

from .linalg import kron

STATE_NORM_TOL = 1e-10

# |00>, |01>, |10>, |11>
BASIS_LABELS = ("00", "01", "10", "11")
DEFAULT_MARKED = 1

# Phase inversion of every basis state except |00>.
A0 = np.diag([1.0, -1.0, -1.0, -1.0]).astype(complex)


@dataclass(frozen=True)
class GateParameter:
    """Real amplitude ``alpha`` in [0, 1]; ``beta`` is the nonnegative root."""

    alpha: float

    def __post_init__(self):
        a = float(self.alpha)
        if not (0.0 <= a <= 1.0) or math.isnan(a):
            raise ValueError("alpha must lie in [0, 1], got %r" % (self.alpha,))
        object.__setattr__(self, "alpha", a)

    @classmethod
    def from_alpha_sq(cls, alpha_sq):
        if not (0.0 <= alpha_sq <= 1.0):
            raise ValueError("alpha_sq must lie in [0, 1], got %r" % (alpha_sq,))
        return cls(math.sqrt(alpha_sq))

    @property
    def beta(self):
        return math.sqrt(max(0.0, 1.0 - self.alpha * self.alpha))

    @property
    def alpha_sq(self):
        return self.alpha * self.alpha


def _check_marked(marked, size=4):
    if not (0 <= int(marked) < size) or int(marked) != marked:
        raise ValueError("marked index must be in 0..%d, got %r" % (size - 1, marked))
    return int(marked)


def is_normalized(psi, tol=STATE_NORM_TOL):
    return abs(float(np.sum(np.abs(psi) ** 2)) - 1.0) <= tol


def make_u_gate(param):
    a, b = param.alpha, param.beta
    return np.array([[a, b], [b, -a]], dtype=complex)


def prepare_superposition(param):
    """(U x U)|00> = (alpha^2, alpha beta, alpha beta, beta^2)."""
    u = make_u_gate(param)
    return kron(u, u)[:, 0].copy()


def apply_oracle(state, marked=DEFAULT_MARKED):
    """Flip the sign of the marked amplitude."""
    psi = np.array(state, dtype=complex)
    psi[_check_marked(marked, psi.shape[0])] *= -1
    return psi


def oracle_matrix(marked=DEFAULT_MARKED, size=4):
    d = np.ones(size, dtype=complex)
    d[_check_marked(marked, size)] = -1
    return np.diag(d)


def make_diffusion(param):
    """D = (U x U) A0 (U x U), built from the gates rather than a printed matrix."""
    u = make_u_gate(param)
    uu = kron(u, u)
    return uu @ A0 @ uu


def grover_pure_pipeline(param, marked=DEFAULT_MARKED):
    """One generalized Grover iterate on |00>: D . O . (U x U)|00>."""
    psi = apply_oracle(prepare_superposition(param), marked)
    return make_diffusion(param) @ psi


def concurrence_to_alpha(c, branch="plus"):
    """Gate parameter whose post-oracle state has concurrence ``c``.

    alpha^2 = (1 + sqrt(1 - c)) / 2 on the plus branch, (1 - sqrt(1 - c)) / 2
    on the minus branch.
    """
    if not (0.0 <= c <= 1.0):
        raise ValueError("concurrence must lie in [0, 1], got %r" % (c,))
    root = math.sqrt(1.0 - c)
    if branch == "plus":
        alpha_sq = 0.5 * (1.0 + root)
    elif branch == "minus":
        alpha_sq = 0.5 * (1.0 - root)
    else:
        raise ValueError("branch must be 'plus' or 'minus', got %r" % (branch,))
    return GateParameter.from_alpha_sq(alpha_sq)


def baseline_grover(num_qubits, marked, iterations):
    """Success probability of textbook n-qubit Grover search.

    Hadamard initialization, phase oracle on ``marked``, inversion about the
    mean, repeated ``iterations`` times.
    """
    if not (1 <= num_qubits <= 12):
        raise ValueError("num_qubits must be in 1..12, got %r" % (num_qubits,))
    if iterations < 0:
        raise ValueError("iterations must be nonnegative")
    size = 1 << num_qubits
    marked = _check_marked(marked, size)
    amp = np.full(size, 1.0 / math.sqrt(size))
    for _ in range(iterations):
        amp[marked] = -amp[marked]
        amp = 2.0 * amp.mean() - amp
    return float(amp[marked] ** 2)


def optimal_iterations(num_qubits):
    return int(round(math.pi * math.sqrt(1 << num_qubits) / 4))
