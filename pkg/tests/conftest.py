import random

import pytest
from hypothesis import HealthCheck, settings

from hyperjac import curve as C
from hyperjac.ff import FieldCtx

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("fast", max_examples=10, deadline=None)
settings.load_profile("default")

_ACCEPTANCE = []


@pytest.fixture
def report():
    def record(criterion, ok, detail=""):
        _ACCEPTANCE.append((criterion, ok, detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {criterion}  {detail}")


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture(params=[13, 101, 65537])
def curve(request):
    return C.random_curve(FieldCtx(request.param), 3, random.Random(request.param))
