from __future__ import annotations

import pytest

from steinberg import cartan_from_name, enumerate_weyl, root_system

ACCEPTANCE_TYPES = ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2"]
SMALL_TYPES = ["A1", "A2", "A3", "B2", "B3", "C3", "G2"]  # |W| <= 48

_acceptance_lines: list[str] = []


def record_acceptance_line(line: str) -> None:
    _acceptance_lines.append(line)


@pytest.fixture(scope="session")
def make_group():
    cache = {}

    def get(name: str):
        if name not in cache:
            cache[name] = enumerate_weyl(root_system(cartan_from_name(name)))
        return cache[name]

    return get


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
