"""Shared pytest hooks.

The acceptance tests record one status line per criterion; emit them in a
dedicated section at the end of the run so they survive output capture.
"""

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
