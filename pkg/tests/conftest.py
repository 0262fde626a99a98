import sys

import pytest

TWO_FACE = "u^4 + ~u u^2 v + u^2 ~v^2 + v^6"
THREE_FACE = "u^5 + u^2 ~u^2 v + u^3 v^2 - i u ~u^2 v^2 + u^2 ~u v^2 + ~u v^6 + v^9"
FOUR_FACE = "u^4 - u^3 v ~v + u^2 v^3 ~v^3 - u v^6 ~v^6 + v^10 ~v^10"

FIXTURES = {"two_face": TWO_FACE, "three_face": THREE_FACE, "four_face": FOUR_FACE}


@pytest.fixture(params=sorted(FIXTURES))
def fixture_name(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
