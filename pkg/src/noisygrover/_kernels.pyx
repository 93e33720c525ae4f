# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled eigenvalue kernels; same contract as ``_kernels_py``."""
import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, fabs, hypot

from .errors import NumericalFailure

cnp.import_array()

cdef double EPS = 2.220446049250313e-16

cdef extern from "complex.h" nogil:
    double cabs(double complex)
    double complex csqrt(double complex)
    double complex conj(double complex)
    double creal(double complex)


cdef inline void _givens(double complex x, double complex y,
                         double complex *c, double complex *s) noexcept nogil:
    cdef double r = hypot(cabs(x), cabs(y))
    if r == 0.0:
        c[0] = 1.0
        s[0] = 0.0
    else:
        c[0] = x / r
        s[0] = y / r


cdef inline void _rotate_rows(double complex[:, ::1] h, Py_ssize_t k,
                              double complex c, double complex s,
                              Py_ssize_t lo, Py_ssize_t hi) noexcept nogil:
    cdef double complex u, v
    cdef double complex cc = conj(c), sc = conj(s)
    cdef Py_ssize_t j
    for j in range(lo, hi + 1):
        u = h[k, j]
        v = h[k + 1, j]
        h[k, j] = cc * u + sc * v
        h[k + 1, j] = -s * u + c * v


cdef inline void _rotate_cols(double complex[:, ::1] h, Py_ssize_t k,
                              double complex c, double complex s,
                              Py_ssize_t lo, Py_ssize_t hi) noexcept nogil:
    cdef double complex u, v
    cdef double complex cc = conj(c), sc = conj(s)
    cdef Py_ssize_t i
    for i in range(lo, hi + 1):
        u = h[i, k]
        v = h[i, k + 1]
        h[i, k] = u * c + v * s
        h[i, k + 1] = -u * sc + v * cc


cdef inline double complex _wilkinson(double complex a, double complex b,
                                      double complex c, double complex d) noexcept nogil:
    cdef double complex half = 0.5 * (a - d)
    cdef double complex disc = csqrt(half * half + b * c)
    cdef double complex m1 = 0.5 * (a + d) + disc
    cdef double complex m2 = 0.5 * (a + d) - disc
    if cabs(m1 - d) <= cabs(m2 - d):
        return m1
    return m2


cdef int _qr_eig(double complex[:, ::1] h, Py_ssize_t n, long max_iter) noexcept nogil:
    # Returns 0 on success, -1 on non-convergence; eigenvalues left on the diagonal.
    cdef Py_ssize_t i, j, k, l, hi
    cdef double anorm = 0.0, scale
    cdef long total = 0, since = 0
    cdef double complex c, s, shift, x
    cdef double complex cs[64]
    cdef double complex ss[64]

    for i in range(n):
        for j in range(n):
            anorm += cabs(h[i, j]) ** 2
    anorm = sqrt(anorm)
    if anorm == 0.0:
        return 0

    for j in range(n - 2):
        for i in range(n - 1, j + 1, -1):
            if h[i, j] == 0:
                continue
            _givens(h[i - 1, j], h[i, j], &c, &s)
            _rotate_rows(h, i - 1, c, s, 0, n - 1)
            _rotate_cols(h, i - 1, c, s, 0, n - 1)
            h[i, j] = 0

    hi = n - 1
    while hi > 0:
        l = hi
        while l > 0:
            scale = cabs(h[l, l]) + cabs(h[l - 1, l - 1])
            if scale == 0.0:
                scale = anorm
            if cabs(h[l, l - 1]) <= EPS * scale:
                h[l, l - 1] = 0
                break
            l -= 1
        if l == hi:
            hi -= 1
            since = 0
            continue

        total += 1
        since += 1
        if total > max_iter:
            return -1
        if since % 10 == 0:
            shift = h[hi, hi] + fabs(creal(h[hi, hi - 1]))
            if hi - 2 >= l:
                shift = shift + fabs(creal(h[hi - 1, hi - 2]))
        else:
            shift = _wilkinson(h[hi - 1, hi - 1], h[hi - 1, hi], h[hi, hi - 1], h[hi, hi])

        for i in range(l, hi + 1):
            h[i, i] = h[i, i] - shift
        for k in range(l, hi):
            _givens(h[k, k], h[k + 1, k], &c, &s)
            _rotate_rows(h, k, c, s, k, hi)
            h[k + 1, k] = 0
            cs[k] = c
            ss[k] = s
        for k in range(l, hi):
            _rotate_cols(h, k, cs[k], ss[k], l, min(k + 2, hi))
        for i in range(l, hi + 1):
            h[i, i] = h[i, i] + shift
    return 0


def eigvals_general(a, long max_iter=10000):
    arr = np.array(a, dtype=np.complex128, order="C", copy=True)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError("expected a square matrix, got shape %r" % (arr.shape,))
    cdef Py_ssize_t n = arr.shape[0]
    if n > 64:
        raise ValueError("kernel supports at most 64x64 matrices")
    cdef double complex[:, ::1] h = arr
    cdef int status
    with nogil:
        status = _qr_eig(h, n, max_iter)
    if status != 0:
        raise NumericalFailure("QR iteration did not converge in %d iterations" % max_iter)
    return np.array([h[i, i] for i in range(n)])


cdef int _jacobi(double[:, ::1] w, Py_ssize_t n, int max_sweeps) noexcept nogil:
    cdef Py_ssize_t p, q, k
    cdef int sweep
    cdef double off, frob = 0.0, apq, theta, t, c, s, a1, a2
    for p in range(n):
        for q in range(n):
            frob += w[p, q] * w[p, q]
    frob = sqrt(frob)
    for sweep in range(max_sweeps):
        off = 0.0
        for p in range(n):
            for q in range(p + 1, n):
                off += w[p, q] * w[p, q]
        if off == 0.0 or sqrt(off) <= 1e-3 * EPS * frob:
            return 0
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = w[p, q]
                if apq == 0.0:
                    continue
                theta = (w[q, q] - w[p, p]) / (2.0 * apq)
                t = 1.0 / (fabs(theta) + sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    a1 = w[k, p]
                    a2 = w[k, q]
                    w[k, p] = c * a1 - s * a2
                    w[k, q] = s * a1 + c * a2
                for k in range(n):
                    a1 = w[p, k]
                    a2 = w[q, k]
                    w[p, k] = c * a1 - s * a2
                    w[q, k] = s * a1 + c * a2
                w[p, q] = 0.0
                w[q, p] = 0.0
    return -1


def eigvals_sym(a, int max_sweeps=100):
    arr = np.array(a, dtype=np.float64, order="C", copy=True)
    cdef double[:, ::1] w = arr
    cdef Py_ssize_t n = arr.shape[0]
    cdef int status
    with nogil:
        status = _jacobi(w, n, max_sweeps)
    if status != 0:
        raise NumericalFailure("Jacobi sweeps did not converge in %d sweeps" % max_sweeps)
    return np.sort(np.diagonal(arr).copy())[::-1].copy()
