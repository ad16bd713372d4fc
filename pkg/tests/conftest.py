import re
from pathlib import Path

import pytest

from llm_tco.dataset import builtin_catalog
from llm_tco.engine import WorkloadProfile

REPO_ROOT = Path(__file__).resolve().parent.parent
GOLDEN_DIR = Path(__file__).resolve().parent / "golden"


@pytest.fixture(scope="session")
def catalog():
    return builtin_catalog()


@pytest.fixture
def workload():
    return WorkloadProfile()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion."""
    outcomes: dict[str, str] = {}
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance.py" not in nodeid or getattr(report, "when", "call") != "call":
                continue
            match = re.search(r"test_(criterion_\d+)_(\w+)", nodeid)
            if match:
                key = f"{match.group(1)} {match.group(2)}"
                previous = outcomes.get(key)
                outcomes[key] = "FAIL" if "passed" != status or previous == "FAIL" else "PASS"
    if outcomes:
        terminalreporter.write_sep("-", "acceptance criteria")
        for key in sorted(outcomes, key=lambda k: int(k.split("_")[1].split()[0])):
            terminalreporter.write_line(f"{key}: {outcomes[key]}")
