import sys
from pathlib import Path

import pytest
import sympy as sp

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402
from krshuffle.qtalg import QtaPoly  # noqa: E402


def poly_to_sympy(p: QtaPoly):
    q, t, a = oracles.q, oracles.t, oracles.a
    return sp.Add(*[c * q**i * t**j * a**k for (i, j, k), c in p.items()])


def to_sympy(s):
    if isinstance(s, QtaPoly):
        return poly_to_sympy(s)
    return poly_to_sympy(s.numerator) / (1 - oracles.q) ** s.denom_power


def same(lhs, rhs) -> bool:
    if isinstance(rhs, str):
        rhs = sp.sympify(rhs, locals={"q": oracles.q, "t": oracles.t, "a": oracles.a})
    return sp.cancel(to_sympy(lhs) - rhs) == 0


@pytest.fixture(scope="session")
def frozen():
    return oracles.load_frozen()


def pytest_terminal_summary(terminalreporter):
    results = getattr(sys.modules.get("test_acceptance"), "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
