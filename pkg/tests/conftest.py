import random
from fractions import Fraction

import pytest

from superhom.grassmann import GrassmannElement
from superhom.polyfun import Polynomial


def rand_q(rng, bound=4, max_den=3):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))


def rand_vec(rng, n, **kw):
    return [rand_q(rng, **kw) for _ in range(n)]


def rand_grassmann(rng, k, density=0.7):
    coeffs = {}
    for mask in range(1 << k):
        if rng.random() < density:
            coeffs[mask] = rand_q(rng)
    return GrassmannElement(k, coeffs)


def rand_poly(rng, n, max_deg=3, terms=4):
    out = {}
    for _ in range(rng.randint(0, terms)):
        exps = [0] * n
        for _ in range(rng.randint(0, max_deg)):
            exps[rng.randrange(n)] += 1
        out[tuple(exps)] = rand_q(rng)
    return Polynomial(n, out)


def dependent_pair(rng, n):
    """A random dependent pair covering both components of the fiber."""
    kind = rng.randrange(4)
    if kind == 0:
        return [0] * n, rand_vec(rng, n)
    if kind == 1:
        return rand_vec(rng, n), [0] * n
    v = rand_vec(rng, n)
    lam = rand_q(rng)
    return v, [lam * x for x in v]


@pytest.fixture
def rng(request):
    return random.Random(request.node.name)


ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion of the build")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        ACCEPTANCE[number] = (title, rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, passed = ACCEPTANCE[number]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] criterion {number:>2}: {title}")
