import pytest

# One line per acceptance criterion, printed in the terminal summary so the
# verdicts survive pytest's output capture.
_criterion_lines: dict[int, str] = {}


@pytest.fixture(scope="session")
def criterion_log():
    class Log:
        def begin(self, num: int, title: str) -> None:
            self._num = num
            _criterion_lines[num] = f"criterion {num:2d}: FAIL ({title})"

        def passed(self, detail: str) -> None:
            _criterion_lines[self._num] = (
                f"criterion {self._num:2d}: PASS ({detail})"
            )

    return Log()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _criterion_lines:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criterion_lines):
        terminalreporter.write_line(_criterion_lines[num])
