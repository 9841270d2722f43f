from collections import defaultdict

_outcomes: dict[int, list[bool]] = defaultdict(list)
_titles: dict[int, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion this test belongs to")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            item.user_properties.append(("criterion", m.args[0]))
            _titles[m.args[0]] = m.args[1]


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _outcomes[crit].append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_outcomes):
        results = _outcomes[crit]
        status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(
            f"{status} criterion {crit}: {_titles[crit]} ({sum(results)}/{len(results)} checks)")
