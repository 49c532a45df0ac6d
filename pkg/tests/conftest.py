from __future__ import annotations

import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    mod = next((m for name, m in sys.modules.items()
                if name.endswith("test_acceptance") and hasattr(m, "RESULTS")), None)
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in range(1, 10):
        if number not in mod.RESULTS:
            terminalreporter.write_line(f"criterion {number} NOT RUN")
            continue
        title, ok, detail = mod.RESULTS[number]
        terminalreporter.write_line(f"criterion {number} {'PASS' if ok else 'FAIL'}: {title} [{detail}]")
