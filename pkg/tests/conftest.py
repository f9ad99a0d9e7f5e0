import pytest

from dsalike import DomainParams, PrivateKey, PublicKey

from .vectors import EX_ALPHA, EX_G, EX_P, EX_Q, EX_X, EX_Y, TOY_ALPHA, TOY_G, TOY_P, TOY_Q

_criteria: dict[int, dict] = {}


@pytest.fixture(scope="session")
def toy():
    return DomainParams(p=TOY_P, q=TOY_Q, alpha=TOY_ALPHA, g=TOY_G)


@pytest.fixture(scope="session")
def example_params():
    return DomainParams(p=EX_P, q=EX_Q, alpha=EX_ALPHA, g=EX_G)


@pytest.fixture(scope="session")
def example_keys():
    return PrivateKey(EX_X), PublicKey(EX_Y)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and not report.failed:
        return
    number, title = marker.args
    entry = _criteria.setdefault(number, {"title": title, "passed": True, "tests": 0})
    if report.when == "call":
        entry["tests"] += 1
    if report.failed:
        entry["passed"] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        status = "PASS" if entry["passed"] else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {entry['title']} ({entry['tests']} tests)")
