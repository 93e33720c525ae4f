import numpy as np
import pytest

from noisygrover import linalg
from noisygrover.channels import damped_state, make_channel
from noisygrover.core import GateParameter

ACCEPTANCE_RESULTS = []


@pytest.fixture(params=linalg.available_backends())
def backend(request):
    previous = linalg.set_backend(request.param)
    yield request.param
    linalg.set_backend(previous)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def noisy(alpha_sq, p, kind, target="second", marked=1):
    param = GateParameter.from_alpha_sq(alpha_sq)
    return damped_state(param, make_channel(kind, p), target, marked)


def random_density(rng, rank=None):
    rank = rank or int(rng.integers(1, 5))
    g = rng.normal(size=(4, rank)) + 1j * rng.normal(size=(4, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_pure(rng, dim=4):
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)


def random_unitary(rng, dim=2):
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line("%s %s  %s" % ("PASS" if ok else "FAIL", name, detail))
