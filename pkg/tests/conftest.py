import contextlib
import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def pytest_configure(config):
    config._acceptance_lines = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(lines):
        terminalreporter.write_line(line[1])


@pytest.fixture
def criterion(request):
    """Context manager recording one PASS/FAIL line per acceptance criterion."""

    @contextlib.contextmanager
    def record(number, title):
        try:
            yield
        except BaseException as exc:
            reason = " ".join(str(exc).split())[:160]
            line = f"criterion {number:>2} FAIL  {title}: {reason}"
            request.config._acceptance_lines.append((number, line))
            print(line)
            raise
        line = f"criterion {number:>2} PASS  {title}"
        request.config._acceptance_lines.append((number, line))
        print(line)

    return record
