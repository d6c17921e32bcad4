import os
import sys

sys.path.insert(0, os.path.dirname(__file__))


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import lines

    report = lines()
    if report:
        terminalreporter.section("acceptance criteria")
        for line in report:
            terminalreporter.write_line(line)
