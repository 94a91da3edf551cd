import pytest

from nilcert.fields import QQ
from nilcert.polyring import PolyRing

_acceptance: list[tuple[str, str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(cid, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark and rep.when == "call":
        cid, title = mark.args
        _acceptance.append((cid, title, "PASS" if rep.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for cid, title, verdict in sorted(_acceptance):
        terminalreporter.write_line(f"{cid} {verdict}  {title}")


@pytest.fixture
def Rxyz():
    return PolyRing("x y z", QQ)


@pytest.fixture
def Rxv():
    return PolyRing("x v", QQ)
