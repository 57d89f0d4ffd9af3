import sys

import pytest

from seqcm_engine.algebra import FreeModule, Ring, Vector
from seqcm_engine.corpus import ideal, module


@pytest.fixture
def R2():
    return Ring(2)


@pytest.fixture
def R3():
    return Ring(3)


@pytest.fixture
def xs():
    """Variables of k[x1..x4] indexed from 1."""
    R = Ring(4)
    return [None] + [R.var(i) for i in range(1, 5)]


def gens_of(U):
    return {v for v in U.generators}


__all__ = ["ideal", "module", "FreeModule", "Ring", "Vector"]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
