import sys


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for k in range(1, 10):
        terminalreporter.write_line(mod.RESULTS.get(k, f"criterion {k}: NOT RUN"))
