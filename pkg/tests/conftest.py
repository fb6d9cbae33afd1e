import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from delzant_emb import build  # noqa: E402

CATALOG_EXPRS = [
    "pentagon",
    "simplex(1, 1)",
    "simplex(2, 1)",
    "simplex(3, 2)",
    "cube(1, 3)",
    "cube(2, 2)",
    "cube(3, 1)",
    "cp_product(1, 1, 1)",
    "cp_product(1, 2, 1)",
    "cp_product(2, 2, 3/2)",
    "hirzebruch(1, 1, 1)",
    "hirzebruch(2, 1, 3)",
    "hirzebruch(1/2, 3/2, 2)",
    "hirzebruch(1, 2, 0)",
    "chopped(cube(2, 2), (2, 2), 1)",
    "chopped(simplex(3, 2), (0, 0, 0), 1/2)",
    "chopped(hirzebruch(2, 1, 1), (0, 0), 1/3)",
]


@pytest.fixture(scope="session")
def catalog():
    return {expr: build(expr) for expr in CATALOG_EXPRS}


@pytest.fixture
def rng():
    return random.Random(20261016)


def random_rational(rng, lo=-5, hi=5, den=6):
    return Fraction(rng.randint(lo * den, hi * den), rng.randint(1, den))


_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion of the build")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _ACCEPTANCE[number] = (title, report.outcome, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, outcome, duration = _ACCEPTANCE[number]
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] {number:2d}. {title} ({duration:.2f}s)")
