"""Small dense complex linear algebra.

Matrices are plain ``numpy`` arrays.  The two eigenvalue routines dispatch to
a compiled kernel when the extension was built and to a pure-Python kernel
otherwise; :func:`set_backend` switches explicitly (used by the benchmark).
"""
import numpy as np

from . import _kernels_py
from .errors import NumericalFailure

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

__all__ = [
    "BACKEND",
    "NumericalFailure",
    "available_backends",
    "dagger",
    "eig_general_4x4",
    "eig_sym_3x3",
    "equal_within",
    "hs_norm",
    "kron",
    "set_backend",
    "trace",
]

DEFAULT_MAX_ITER = 10_000
DEFAULT_EQ_TOL = 1e-10
SYMMETRY_TOL = 1e-12

_backend = _compiled if _compiled is not None else _kernels_py
BACKEND = "compiled" if _compiled is not None else "python"


def available_backends():
    names = ["python"]
    if _compiled is not None:
        names.insert(0, "compiled")
    return names


def set_backend(name):
    """Select ``"compiled"`` or ``"python"`` eigenvalue kernels; returns the previous name."""
    global _backend, BACKEND
    if name == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not available in this build")
        new = _compiled
    elif name == "python":
        new = _kernels_py
    else:
        raise ValueError("unknown backend %r" % (name,))
    previous = BACKEND
    _backend, BACKEND = new, name
    return previous


def get_kernels(name):
    return {"compiled": _compiled, "python": _kernels_py}[name]


def kron(a, b):
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def dagger(m):
    return np.conj(np.asarray(m)).T


def trace(m):
    return complex(np.trace(m))


def hs_norm(m):
    """Hilbert-Schmidt norm sqrt(Tr(m^dagger m))."""
    m = np.asarray(m)
    return float(np.sqrt(np.sum(np.abs(m) ** 2)))


def equal_within(a, b, eps=DEFAULT_EQ_TOL):
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        return False
    return bool(np.max(np.abs(a - b), initial=0.0) <= eps)


def eig_general_4x4(m, max_iter=DEFAULT_MAX_ITER):
    """All four eigenvalues of a 4x4 complex matrix, with multiplicity.

    Raises NumericalFailure when the QR iteration exceeds ``max_iter``.
    """
    m = np.asarray(m, dtype=complex)
    if m.shape != (4, 4):
        raise ValueError("expected a 4x4 matrix, got shape %r" % (m.shape,))
    return _backend.eigvals_general(m, max_iter)


def eig_sym_3x3(m):
    """Eigenvalues of a real symmetric 3x3 matrix in descending order."""
    m = np.asarray(m)
    if m.shape != (3, 3):
        raise ValueError("expected a 3x3 matrix, got shape %r" % (m.shape,))
    if np.iscomplexobj(m):
        if np.max(np.abs(m.imag)) > SYMMETRY_TOL:
            raise ValueError("matrix is not real")
        m = m.real
    if np.max(np.abs(m - m.T)) > SYMMETRY_TOL:
        raise ValueError("matrix is not symmetric within %g" % SYMMETRY_TOL)
    return _backend.eigvals_sym(np.asarray(m, dtype=float))
