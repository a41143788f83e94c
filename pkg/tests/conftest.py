import pytest

from grig.io import corpus_algebra

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def corpus():
    cache = {}

    def get(name: str):
        if name not in cache:
            cache[name] = corpus_algebra(name)
        return cache[name]

    return get


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
