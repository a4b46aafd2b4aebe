import pytest

from gbtd.construction import build_mp
from gbtd.fixtures import example1_design, example2_matrix, example3_matrix

PRIMES = [3, 5, 7, 11, 13]

_acceptance_lines: list[str] = []


@pytest.fixture(scope="session")
def mp_cache():
    cache = {}

    def get(p):
        if p not in cache:
            cache[p] = build_mp(p)
        return cache[p]

    return get


@pytest.fixture
def ex1():
    return example1_design()


@pytest.fixture
def ex2():
    return example2_matrix()


@pytest.fixture
def ex3():
    return example3_matrix()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when != "call":
        return
    status = "PASS" if rep.passed else "FAIL"
    _acceptance_lines.append(f"[{status}] criterion {marker.args[0]}: {marker.args[1]}")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance_lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
