"""Session-level reporting: one verdict line per acceptance criterion.

The acceptance tests are named ``test_criterion_<number>_...``; after the
run this hook prints ``acceptance criterion N: PASS/FAIL/SKIP`` for each,
plus any notes the tests recorded, in a dedicated summary section.
"""

import re
import sys

_CRITERION = re.compile(r"test_criterion_(\d+)")
_VERDICTS = {
    "passed": "PASS",
    "failed": "FAIL",
    "error": "FAIL",
    "skipped": "SKIP",
}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    outcomes = {}
    for status, verdict in _VERDICTS.items():
        for report in terminalreporter.stats.get(status, []):
            if status != "error" and getattr(report, "when", "call") != "call":
                continue
            match = _CRITERION.search(getattr(report, "nodeid", ""))
            if match:
                outcomes[int(match.group(1))] = verdict
    if not outcomes:
        return
    module = sys.modules.get("test_acceptance") or sys.modules.get(
        "tests.test_acceptance"
    )
    summaries = getattr(module, "CRITERION_SUMMARIES", {}) if module else {}
    notes = getattr(module, "NOTES", []) if module else []
    terminalreporter.section("acceptance criteria")
    for number in sorted(outcomes):
        summary = summaries.get(number, "")
        suffix = f" — {summary}" if summary else ""
        terminalreporter.write_line(
            f"acceptance criterion {number}: {outcomes[number]}{suffix}"
        )
    for note in notes:
        terminalreporter.write_line(f"note: {note}")
