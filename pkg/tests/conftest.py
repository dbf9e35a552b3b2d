"""Shared test plumbing: the end-of-run acceptance checklist.

Acceptance tests append one line per guarantee to CHECKLIST; the
terminal-summary hook prints them after the test results, outside
pytest's output capture.
"""

CHECKLIST = []


def pytest_terminal_summary(terminalreporter):
    if CHECKLIST:
        terminalreporter.section("acceptance checklist")
        for line in CHECKLIST:
            terminalreporter.write_line(line)
