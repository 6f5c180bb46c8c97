import pytest

_KEY = pytest.StashKey[dict]()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): gates acceptance criterion n")
    config.addinivalue_line("markers", "informational(n): reported next to criterion n, never gates it")
    config.stash[_KEY] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when != "call" and not (rep.when == "setup" and rep.failed):
        return
    for name in ("criterion", "informational"):
        marker = item.get_closest_marker(name)
        if marker is None:
            continue
        n = marker.args[0]
        entry = item.config.stash[_KEY].setdefault(n, {"criterion": [], "informational": [], "title": ""})
        entry["title"] = getattr(item.module, "CRITERIA", {}).get(n, "")
        entry[name].append((item.name, rep.passed))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_KEY, {})
    if not results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(results):
        entry = results[n]
        gates = entry["criterion"]
        if gates:
            status = "PASS" if all(ok for _, ok in gates) else "FAIL"
            tr.write_line(f"criterion {n:>2}: {status}  {entry['title']}")
            for name, ok in gates:
                if not ok:
                    tr.write_line(f"              failed: {name}")
        for name, ok in entry["informational"]:
            tr.write_line(f"              info {'pass' if ok else 'fail'}: {name}")
