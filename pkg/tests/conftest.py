"""Shared fixtures: memoized chain/dimer systems and the acceptance report."""

import warnings

import pytest

from hchain.pipeline import build_chain_system, build_hydrogen_system

_CHAIN_CACHE = {}
_H2_CACHE = {}


def chain_system(r):
    """Memoized full pipeline build at geometry parameter r."""
    key = round(float(r), 9)
    if key not in _CHAIN_CACHE:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            _CHAIN_CACHE[key] = build_chain_system(float(r))
    return _CHAIN_CACHE[key]


def hydrogen_system(bond):
    key = round(float(bond), 9)
    if key not in _H2_CACHE:
        _H2_CACHE[key] = build_hydrogen_system(float(bond))
    return _H2_CACHE[key]


@pytest.fixture(scope="session")
def get_chain():
    return chain_system


@pytest.fixture(scope="session")
def get_h2():
    return hydrogen_system


# One line per acceptance criterion, echoed after the run so the gate is
# readable straight off the pytest output.
ACCEPTANCE_LINES = []


def record_criterion(number: int, ok: bool, summary: str) -> str:
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'} - {summary}"
    ACCEPTANCE_LINES.append(line)
    return line


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
