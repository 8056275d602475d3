import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def report():
    def record(number: int, ok: bool, detail: str, seconds: float) -> None:
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'} ({seconds:.2f}s) {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
