import numpy as np
import pytest

from simplestates.states import DenseState

ACCEPTANCE_RESULTS = {}


def random_dense(n, rng):
    v = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
    return DenseState.from_array(v, normalize=True)


@pytest.fixture
def rng():
    return np.random.default_rng(20091)


@pytest.fixture
def bell():
    return DenseState.from_array(np.array([1, 0, 0, 1]) / np.sqrt(2))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and report.when == "call":
        key = marker.args[0]
        ACCEPTANCE_RESULTS.setdefault(key, []).append((item.name, report.passed))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        results = ACCEPTANCE_RESULTS[key]
        ok = all(p for _, p in results)
        failed = [name for name, p in results if not p]
        line = f"criterion {key}: {'PASS' if ok else 'FAIL'} ({len(results) - len(failed)}/{len(results)} checks)"
        if failed:
            line += "  failing: " + ", ".join(failed)
        tr.write_line(line)
