from __future__ import annotations

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("qck", max_examples=30, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("qck")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


_ACCEPTANCE: list[tuple[int, bool, str]] = []


@pytest.fixture
def criterion():
    """Record one acceptance line; the summary prints them in order."""
    def record(k: int, ok: bool, detail: str) -> None:
        _ACCEPTANCE.append((k, bool(ok), detail))
        print(f"{'PASS' if ok else 'FAIL'} criterion {k:2d}: {detail}")
        assert ok, detail
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k, ok, detail in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {k:2d}: {detail}")
