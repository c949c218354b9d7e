import warnings

import pytest

from cavity_eit import build, presets


def _build(p):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return build(p)


@pytest.fixture(scope="session")
def vacuum_d4():
    return _build(presets.vacuum_probe(delta=4.0))


@pytest.fixture(scope="session")
def vacuum_d2():
    return _build(presets.vacuum_probe(delta=2.0))


@pytest.fixture(scope="session")
def empty_cavity():
    return _build(presets.vacuum_probe(g1=0.0, g2=0.0, r=2.0, alpha1=-200.0))


@pytest.fixture(scope="session")
def driven_d2():
    return _build(presets.driven_probe(delta=2.0, Gamma12=1e-4))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import ACCEPTANCE_LINES
    except ImportError:
        return
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
