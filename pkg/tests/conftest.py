import sys

import pytest
from hypothesis import settings

from normtrace.curve import make_curve
from normtrace.gf import FieldParams, field_for, make_field

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

SMALL_FIELDS = [FieldParams(2, 1, 2), FieldParams(2, 1, 3), FieldParams(2, 1, 4), FieldParams(2, 2, 2),
                FieldParams(3, 1, 2), FieldParams(3, 1, 3), FieldParams(5, 1, 2), FieldParams(2, 3, 2)]


@pytest.fixture(params=SMALL_FIELDS, ids=lambda p: f"F{p.q}^{p.r}")
def field(request):
    return make_field(request.param)


@pytest.fixture
def f9():
    return field_for(3, 2)


@pytest.fixture
def curve_f9_u4():
    return make_curve(field_for(3, 2), 4)


@pytest.fixture
def curve_f9_u2():
    return make_curve(field_for(3, 2), 2)


@pytest.fixture
def curve_f16_u3():
    return make_curve(field_for(2, 4), 3)


@pytest.fixture
def hermitian_f4():
    return make_curve(field_for(2, 2), 3)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
