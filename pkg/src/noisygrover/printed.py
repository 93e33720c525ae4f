"""Transcribed closed forms, kept symbol for symbol for auditing.

Every function here reproduces an expression exactly as written in the
source derivation, misprints included, so that :mod:`noisygrover.experiments`
can measure how far each one sits from direct computation.  Nothing in the
simulation path imports this module.

Arguments are the gate amplitudes ``a`` (alpha), ``b`` (beta) and the damping
probability ``p``; the ``c``-forms take the concurrence ``c`` and a branch
sign ``sign`` (+1 picks the upper of each +/- pair).
"""
from math import sqrt

import numpy as np


def diffusion(a, b):
    return np.array([
        [a**4 - 2*a**2*b**2 - b**4, 2*a**3*b, 2*a*b, 2*a**2*b**2],
        [2*a**3*b, -a**4 - b**4, 2*a**2*b**2, 2*a*b**3],
        [2*a**3*b, 2*a**2*b**2, -a**4 - b**4, 2*a*b**3],
        [2*a**2*b**2, 2*a*b**3, 2*a*b**3, -a**4 - 2*a**2*b**2 + b**4],
    ])


def diffusion_c_form(c, sign):
    r = sqrt(1 - c)
    h = 0.5 * sqrt(c)
    up, dn = h * (1 + sign*r), h * (1 - sign*r)
    return np.array([
        [sign*r - c/2, up, up, c/2],
        [up, (c - 2)/2, c/2, up],
        [up, c/2, (c - 2)/2, dn],
        [c/2, dn, up, -sign*r - c/2],
    ]) / 8


def final_amplitudes_c_form(c, sign):
    r = sqrt(1 - c)
    q = sqrt(c)
    return np.array([
        (4 - 4*c) + sign*(4 - 4*c)*r,
        12*q - 4*c*q,
        4*q - 4*c*q,
        (4 - 4*c) - sign*(4 - 4*c)*r,
    ]) / 8


def amplitude_damped_density(a, b, p):
    q = sqrt(1 - p)
    return np.array([
        [a**4 + p*a**2*b**2, -q*a**3*b, a**3*b - p*a*b**3, q*a**2*b**2],
        [-q*a**3*b, (1 - p)*a**2*b**2, -q*a**2*b**2, -(1 - p)*a*b**3],
        [a**3*b - p*a*b**3, -q*a**3*b, a**2*b**2 + p*b**4, q*a*b**3],
        [q*a**2*b**2, -(1 - p)*a*b**3, q*a*b**3, (1 - p)*b**4],
    ])


def phase_damped_density(a, b, p):
    # The third row is printed with a missing column separator; it is read
    # as (a^3 b, -q a^2 b^2, a^2 b^2, q a b^3).
    q = sqrt(1 - p)
    return np.array([
        [a**4, -q*a**3*b, a**3*b, q*a**2*b**2],
        [-q*a**3*b, a**2*b**2, -q*a**2*b**2, -a*b**3],
        [a**3*b, -q*a**2*b**2, a**2*b**2, q*a*b**3],
        [q*a**2*b**2, -a*b**3, q*a**3*b, b**4],
    ])


def amplitude_damped_concurrence(a, b, p):
    return max(0.0, 4*a**2*b**2*sqrt(1 - p))


def amplitude_damped_bloch(a, b, p):
    return {
        "rx": 2*a**3*b - 2*a*b**3,
        "ry": 0.0,
        "rz": a**4 - b**4,
        "sx": 2*sqrt(1 - p)*(a*b**3 - a**3*b),
        "sy": 0.0,
        "sz": a**4 + 2*p*b**2 - b**4,
        "txx": 0.0,
        "txy": 0.0,
        "tyx": 0.0,
        "tyz": 0.0,
        "tzy": 0.0,
        "txz": 2*a*b*(1 - 2*p*b**2),
        "tyy": 4*a**2*b**2*sqrt(1 - p),
        "tzx": -4*a**3*b*sqrt(1 - p),
        "tzz": (a**2 - b**2)*(a**2 + (2*p - 1)*b**2),
    }


def amplitude_damped_discord(a, b, p):
    A, B = a, b
    inner = (
        A**16 - 24*p*A**14*B**2 + 16*A**14*B**2 + 152*p**2*A**12*B**4 - 216*p*A**12*B**4
        + 92*A**12*B**4 + 2*A**12
        - 96*p**3*A**10*B**6 + 368*p**2*A**10*B**6 - 504*p*A**10*B**6 + 208*A**10*B**6
        - 96*p*A**10*B**4 - 24*p*A**10*B**2 + 68*A**10*B**2 + 16*p**4*A**8*B**8
        + 736*p**3*A**8*B**8 - 664*p**2*A**8*B**8 + 40*p*A**8*B**8 + 70*A**8*B**8
        - 768*p**2*A**8*B**6 + 768*p*A**8*B**6 + 8*p**2*A**8*B**4 + 248*p*A**8*B**4
        - 322*A**8*B**4 + A**8 + 64*p**4*A**6*B**10 - 192*p**3*A**6*B**10
        + 480*p**2*A**6*B**10 + 440*p*A**6*B**10 - 208*A**6*B**10 - 128*p**3*A**6*B**8
        + 768*p**2*A**6*B**8 - 320*p*A**6*B**8 - 32*p**2*A**6*B**6 - 240*p*A**6*B**6
        + 32*p*A**6*B**4 - 12*A**6*B**2 + 96*p**4*A**4*B**12 + 64*p**3*A**4*B**12
        + 488*p**2*A**4*B**12 - 328*p*A**4*B**12 + 92*A**4*B**12 - 256*p**3*A**4*B**10
        - 768*p**2*A**4*B**10 + 256*p*A**4*B**10 + 432*p**2*A**4*B**8
        + 208*p*A**4*B**8 - 130*A**4*B**8 - 192*p*A**4*B**6 + 38*A**4*B**4
        + 64*p**4*A**2*B**14 + 32*p**3*A**2*B**14 - 144*p**2*A**2*B**14
        + 88*p*A**2*B**14
        - 16*A**2*B**14 - 128*p**3*A**2*B**12 + 256*p**2*A**2*B**12 - 96*p*A**2*B**12
        - 32*p**2*A**2*B**10 - 56*p*A**2*B**10 + 36*A**2*B**10 + 32*p*A**2*B**8
        - 12*A**2*B**6 + 16*p**4*B**16 - 32*p**3*B**16 + 24*p**2*B**16 - 8*p*B**16
        + B**16 + 8*p**2*B**12 - 8*p*B**12 + 2*B**12 + B**8
    )
    outer = (
        A**8/2 + B**8/2 + A**4/2 + B**4/2 - 2*p*B**8 + A**2*B**2 + 15*A**4*B**4
        + 8*A**6*B**2 + 2*p**2*B**8 - 8*p*A**2*B**4 + 6*p*A**2*B**6 - 22*p*A**4*B**4
        - 6*p*A**6*B**2 + 4*p**2*A**2*B**6 + 2*p**2*A**4*B**4
    )
    return 0.5 * (outer - inner)


def probability_expansions(a, b, t):
    """The four post-diffusion probabilities in terms of correlation entries only.

    ``t`` is the 3x3 correlation matrix indexed (x, y, z).
    """
    txx, tyy, tzz = t[0][0], t[1][1], t[2][2]
    txz, tzx = t[0][2], t[2][0]
    a1 = 0.25 * (
        tyy*(4*a**6*b**2 + 8*a**4*b**4 + 4*a**2*b**6)
        + txx*(-8*a**4*b**4 + 12*a**6*b**2 - 4*a**2*b**6)
        + tzz*(4*a**2*b**6 - 12*a**6*b**2 + 6*a**4*b**4 + a**8 + b**8)
        + txz*(4*a**7*b - 16*a**5*b**3 - 4*a**3*b**5)
        + tzx*(4*a**7*b - 16*a**5*b**3 - 4*a**3*b**5)
        + (6*a**4*b**4 + 4*a**6*b**2 + 4*a**2*b**6 + a**8 + b**8)
    )
    a2 = 0.25 * (
        tyy*(-4*a**6*b**2 - 8*a**4*b**4 - 4*a**2*b**6)
        + txx*(-8*a**4*b**4 - 4*a**6*b**2 - 4*a**2*b**6)
        + tzz*(4*a**2*b**6 + 4*a**6*b**2 - 6*a**4*b**4 - a**8 - b**8)
        + txz*(4*a*b**7 + 12*a**5*b**3)
        + tzx*(-4*a**7*b - 12*a**3*b**5)
        + (6*a**4*b**4 + 4*a**6*b**2 + 4*a**2*b**6 + a**8 + b**8)
    )
    a3 = 0.25 * (
        tyy*(-4*a**6*b**2 - 8*a**4*b**4 - 4*a**2*b**6)
        + txx*(8*a**4*b**4 - 4*a**6*b**2 - 4*a**2*b**6)
        + tzz*(4*a**2*b**6 + 4*a**6*b**2 - 6*a**4*b**4 - a**8 - b**8)
        + txz*(-4*a**7*b - 12*a**3*b**5)
        + tzx*(4*a*b**7 + 12*a**5*b**3)
        + (4*a**6*b**2 + 4*a**2*b**6 + a**8 + b**8)
    )
    a4 = 0.25 * (
        tyy*(4*a**6*b**2 + 8*a**4*b**4 + 4*a**2*b**6)
        + txx*(-8*a**4*b**4 - 4*a**6*b**2 + 12*a**2*b**6)
        + tzz*(-12*a**2*b**6 + 4*a**6*b**2 + 6*a**4*b**4 + a**8 + b**8)
        + txz*(-4*a**7*b + 16*a**5*b**3 + 4*a**3*b**5)
        + tzx*(-4*a**7*b + 16*a**5*b**3 + 4*a**3*b**5)
        + (6*a**4*b**4 + 4*a**6*b**2 + 4*a**2*b**6 + a**8 + b**8)
    )
    return np.array([a1, a2, a3, a4])


def phase_damped_concurrence(a, b, p):
    q = sqrt(1 - p)
    # max(0, .) guards the second root against rounding just below zero at p = 0
    return 2*a**2*b**2*(sqrt(2 - p + 2*q) - sqrt(max(0.0, 2 - p - 2*q)))


def phase_damped_bloch(a, b, p):
    q = sqrt(1 - p)
    return {
        "rx": 2*a**3*b - 2*a*b**3,
        "ry": 0.0,
        "rz": 0.0,
        "txx": 0.0,
        "txy": 0.0,
        "txz": 2*a**3*b + 2*a*b**3,
        "tyx": 0.0,
        "tyy": -4*a**2*b**2*q,
        "tyz": 0.0,
        "tzx": -2*q*(a**3*b + a*b**3),
        "tzy": 0.0,
        "tzz": 0.0,
    }


def phase_damped_discord(a, b, p):
    return 0.5 * 4*a**2*b**2*(1 - p)*(a**4 + 6*a**4*b**4 + b**4)


def phase_damped_amplitudes(a, b, p):
    q = sqrt(1 - p)
    base = 0.25 * (a**8 + b**8 + 6*a**4*b**4 + 4*a**2*b**6 + 4*a**6*b**2)
    yy = a**2*b**2*q*(4*a**6*b**2 + 8*a**4*b**4 + 4*a**2*b**6)
    m0 = -4*a**7*b + 16*a**5*b**3 + 4*a**3*b**5
    m3 = -4*a*b**7 + 16*a**3*b**5 + 4*a**5*b**3
    amp00 = base - 0.5*(a*b*m0) + 0.5*(a*b*q*m0) - yy
    amp01 = (base + 0.5*(a*b*(4*a*b**7 + 12*a**5*b**3))
             + 0.5*(a*b*q*(4*a**7*b + 12*a**3*b**5)) + yy)
    amp10 = (base - 0.5*(a*b*(4*a**7*b + 12*a**3*b**5))
             - 0.5*(a*b*q*(4*a*b**7 + 12*a**5*b**3)) + yy)
    amp11 = base + 0.5*(a*b*m3) + 0.5*(a*b*q*m3) - yy
    return np.array([amp00, amp01, amp10, amp11])
