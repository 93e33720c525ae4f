"""Entanglement and quantum-correlation measures for two-qubit states."""
from dataclasses import dataclass

import numpy as np

from .core import make_diffusion
from .errors import NumericalFailure
from .linalg import dagger, eig_general_4x4, eig_sym_3x3, hs_norm, kron

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)
I2 = np.eye(2, dtype=complex)
YY = kron(SIGMA_Y, SIGMA_Y)

_LOCAL_FIRST = np.array([kron(sig, I2) for sig in PAULIS])
_LOCAL_SECOND = np.array([kron(I2, sig) for sig in PAULIS])
_CORRELATORS = np.array([[kron(a, b) for b in PAULIS] for a in PAULIS])

NORMALIZATIONS = {"paper": 0.5, "quarter": 0.25}

# Eigenvalues of rho * rho_tilde lie in [0, 1] for unit-trace inputs; anything
# below this floor is rounding noise and is zeroed before the square root.
WOOTTERS_ZERO_FLOOR = 1e-14
NEGATIVE_TOL = 1e-9


def pure_density(psi):
    psi = np.asarray(psi, dtype=complex)
    return np.outer(psi, psi.conj())


def check_density(rho, tol=1e-10):
    """Raise ValueError unless rho is Hermitian, unit-trace and PSD within tol."""
    rho = np.asarray(rho)
    if rho.shape != (4, 4):
        raise ValueError("expected a 4x4 density matrix, got shape %r" % (rho.shape,))
    if np.max(np.abs(rho - dagger(rho))) > tol:
        raise ValueError("density matrix is not Hermitian")
    if abs(np.trace(rho) - 1.0) > tol:
        raise ValueError("density matrix does not have unit trace")
    if np.linalg.eigvalsh(0.5 * (rho + dagger(rho)))[0] < -NEGATIVE_TOL:
        raise ValueError("density matrix has a negative eigenvalue")
    return rho


def concurrence_pure(psi):
    """|<psi|(sy x sy)|psi*>| for a normalized two-qubit pure state."""
    psi = np.asarray(psi, dtype=complex)
    flipped = YY @ psi.conj()
    return float(abs(np.vdot(psi, flipped)))


def spin_flip(rho):
    rho = np.asarray(rho, dtype=complex)
    return YY @ rho.conj() @ YY


def wootters_lambdas(rho):
    """Square roots of the eigenvalues of rho * spin_flip(rho), descending."""
    rho = np.asarray(rho, dtype=complex)
    mu = eig_general_4x4(rho @ spin_flip(rho)).real
    mu = np.where(mu < WOOTTERS_ZERO_FLOOR, 0.0, mu)
    return np.sort(np.sqrt(mu))[::-1]


def concurrence_mixed(rho):
    lam = wootters_lambdas(rho)
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


@dataclass(frozen=True)
class BlochDecomposition:
    """rho = 1/4 (I x I + r.sigma x I + I x s.sigma + sum_ij t_ij sigma_i x sigma_j)."""

    r: np.ndarray
    s: np.ndarray
    t: np.ndarray

    def reconstruct(self):
        rho = kron(I2, I2)
        for i in range(3):
            rho = rho + self.r[i] * kron(PAULIS[i], I2) + self.s[i] * kron(I2, PAULIS[i])
            for j in range(3):
                rho = rho + self.t[i, j] * kron(PAULIS[i], PAULIS[j])
        return rho / 4


def bloch_decompose(rho):
    """Local Bloch vectors r, s and correlation matrix T via Tr(rho P) for Pauli products P."""
    rho = np.asarray(rho, dtype=complex)
    # Tr(rho P) = sum_ij rho_ij P_ji
    r = np.einsum("ij,kji->k", rho, _LOCAL_FIRST).real
    s = np.einsum("ij,kji->k", rho, _LOCAL_SECOND).real
    t = np.einsum("ij,klji->kl", rho, _CORRELATORS).real
    return BlochDecomposition(r, s, t)


def geometric_discord(rho, norm="paper", measured="second"):
    """Geometric discord prefactor * (|x|^2 + ||T||^2 - k_max).

    ``norm`` is ``"paper"`` (prefactor 1/2) or ``"quarter"`` (1/4).  The
    measured qubit defaults to the second one, the qubit the damping channel
    acts on; x is its Bloch vector and k_max the largest eigenvalue of
    x x^T + T^T T (T T^T when the first qubit is measured).
    """
    try:
        prefactor = NORMALIZATIONS[norm]
    except KeyError:
        raise ValueError("norm must be 'paper' or 'quarter', got %r" % (norm,)) from None
    b = bloch_decompose(rho)
    if measured == "second":
        x, tt = b.s, b.t.T @ b.t
    elif measured == "first":
        x, tt = b.r, b.t @ b.t.T
    else:
        raise ValueError("measured must be 'first' or 'second', got %r" % (measured,))
    k_max = eig_sym_3x3(np.outer(x, x) + tt)[0]
    value = prefactor * (float(x @ x) + hs_norm(b.t) ** 2 - k_max)
    if value < 0.0:
        if value < -NEGATIVE_TOL:
            raise NumericalFailure("geometric discord evaluated to %g" % value)
        value = 0.0
    return value


def final_probabilities(rho, param):
    """Measurement probabilities after the diffusion step, diag(D rho D^dagger)."""
    d = make_diffusion(param)
    probs = np.diagonal(d @ np.asarray(rho, dtype=complex) @ dagger(d)).real
    return np.clip(probs, 0.0, 1.0)
