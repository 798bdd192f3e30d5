import pytest

from weylcohom.kostant import PartitionTable
from weylcohom.rootsys import root_system
from weylcohom.weyl import enumerate_group


class System:
    def __init__(self, family, rank):
        self.rs = root_system(family, rank)
        self.W = enumerate_group(self.rs)
        self.table = PartitionTable(self.rs)


_systems = {}


@pytest.fixture(scope="session")
def system():
    def get(family, rank):
        key = (family, rank)
        if key not in _systems:
            _systems[key] = System(family, rank)
        return _systems[key]

    return get


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")
    config._criteria = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    crit = getattr(report, "criterion", None)
    if crit is None:
        return
    outcomes = report.config_criteria
    outcomes.setdefault(crit, []).append((report.nodeid, report.passed))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        rep.criterion = marker.args[0]
        rep.config_criteria = item.config._criteria


def pytest_terminal_summary(terminalreporter, config):
    crits = getattr(config, "_criteria", {})
    if not crits:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(crits):
        results = crits[n]
        ok = all(passed for _, passed in results)
        failed = [nid.split("::")[-1] for nid, passed in results if not passed]
        line = f"criterion {n}: {'PASS' if ok else 'FAIL'} ({len(results)} checks)"
        if failed:
            line += " failing: " + ", ".join(failed)
        terminalreporter.write_line(line)
