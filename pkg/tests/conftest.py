"""Shared pytest plumbing: surface acceptance PASS/FAIL lines in the summary.

Default capture swallows prints from passing tests; the acceptance suite
records its one-line verdicts here and a terminal-summary hook replays them.
"""

ACCEPTANCE_LINES: list[str] = []


def record_acceptance(line: str) -> None:
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
