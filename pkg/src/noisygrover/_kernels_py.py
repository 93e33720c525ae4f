"""Pure-Python eigenvalue kernels.

Used when the compiled ``_kernels`` extension is unavailable.  Both modules
expose the same two functions with identical semantics:

``eigvals_general(a, max_iter)``
    all eigenvalues of a small complex square matrix (shifted QR on the
    Hessenberg form, Givens rotations, Wilkinson shifts)
``eigvals_sym(a, max_sweeps)``
    eigenvalues of a real symmetric matrix (cyclic Jacobi), descending
"""
import math

import numpy as np

from .errors import NumericalFailure

EPS = 2.220446049250313e-16


def _givens(x, y):
    # Returns (c, s) with [[conj(c), conj(s)], [-s, c]] @ [x, y] = [r, 0].
    r = math.hypot(abs(x), abs(y))
    if r == 0.0:
        return 1.0 + 0j, 0j
    return x / r, y / r


def _rotate_rows(h, k, c, s, lo, hi):
    cc = c.conjugate()
    sc = s.conjugate()
    rk = h[k]
    rk1 = h[k + 1]
    for j in range(lo, hi + 1):
        u = rk[j]
        v = rk1[j]
        rk[j] = cc * u + sc * v
        rk1[j] = -s * u + c * v


def _rotate_cols(h, k, c, s, lo, hi):
    sc = s.conjugate()
    cc = c.conjugate()
    for i in range(lo, hi + 1):
        row = h[i]
        u = row[k]
        v = row[k + 1]
        row[k] = u * c + v * s
        row[k + 1] = -u * sc + v * cc


def _hessenberg(h, n):
    for j in range(n - 2):
        for i in range(n - 1, j + 1, -1):
            if h[i][j] == 0:
                continue
            c, s = _givens(h[i - 1][j], h[i][j])
            _rotate_rows(h, i - 1, c, s, 0, n - 1)
            _rotate_cols(h, i - 1, c, s, 0, n - 1)
            h[i][j] = 0j


def _wilkinson(a, b, c, d):
    half = 0.5 * (a - d)
    disc = (half * half + b * c) ** 0.5
    m1 = 0.5 * (a + d) + disc
    m2 = 0.5 * (a + d) - disc
    return m1 if abs(m1 - d) <= abs(m2 - d) else m2


def eigvals_general(a, max_iter=10000):
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("expected a square matrix, got shape %r" % (m.shape,))
    n = m.shape[0]
    h = [[complex(v) for v in row] for row in m]
    if n == 1:
        return np.array([h[0][0]])
    anorm = math.sqrt(sum(abs(v) ** 2 for row in h for v in row))
    if anorm == 0.0:
        return np.zeros(n, dtype=complex)
    _hessenberg(h, n)

    hi = n - 1
    total = 0
    since_deflation = 0
    while hi > 0:
        l = hi
        while l > 0:
            scale = abs(h[l][l]) + abs(h[l - 1][l - 1])
            if scale == 0.0:
                scale = anorm
            if abs(h[l][l - 1]) <= EPS * scale:
                h[l][l - 1] = 0j
                break
            l -= 1
        if l == hi:
            hi -= 1
            since_deflation = 0
            continue

        total += 1
        since_deflation += 1
        if total > max_iter:
            raise NumericalFailure(
                "QR iteration did not converge in %d iterations" % max_iter)
        if since_deflation % 10 == 0:
            # exceptional shift breaks symmetric stalls
            shift = h[hi][hi] + abs(h[hi][hi - 1].real) + abs(h[hi - 1][hi - 2].real if hi - 2 >= l else 0.0)
        else:
            shift = _wilkinson(h[hi - 1][hi - 1], h[hi - 1][hi], h[hi][hi - 1], h[hi][hi])

        for i in range(l, hi + 1):
            h[i][i] -= shift
        rots = []
        for k in range(l, hi):
            c, s = _givens(h[k][k], h[k + 1][k])
            _rotate_rows(h, k, c, s, k, hi)
            h[k + 1][k] = 0j
            rots.append((k, c, s))
        for k, c, s in rots:
            _rotate_cols(h, k, c, s, l, min(k + 2, hi))
        for i in range(l, hi + 1):
            h[i][i] += shift

    return np.array([h[i][i] for i in range(n)])


def eigvals_sym(a, max_sweeps=100):
    m = np.asarray(a, dtype=float)
    n = m.shape[0]
    w = [[float(v) for v in row] for row in m]
    frob = math.sqrt(sum(v * v for row in w for v in row))
    for _ in range(max_sweeps):
        off = sum(w[i][j] ** 2 for i in range(n) for j in range(i + 1, n))
        if off == 0.0 or math.sqrt(off) <= 1e-3 * EPS * frob:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = w[p][q]
                if apq == 0.0:
                    continue
                theta = (w[q][q] - w[p][p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp = w[k][p]
                    akq = w[k][q]
                    w[k][p] = c * akp - s * akq
                    w[k][q] = s * akp + c * akq
                for k in range(n):
                    apk = w[p][k]
                    aqk = w[q][k]
                    w[p][k] = c * apk - s * aqk
                    w[q][k] = s * apk + c * aqk
                w[p][q] = w[q][p] = 0.0
    else:
        raise NumericalFailure("Jacobi sweeps did not converge in %d sweeps" % max_sweeps)
    return np.array(sorted((w[i][i] for i in range(n)), reverse=True))
