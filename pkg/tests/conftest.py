import pytest

from gradimpact import AuditConfig, audit
from gradimpact.fixtures import showcase_af
from gradimpact.principles import corpus_frameworks

# One line per acceptance criterion, echoed after the run so the verdicts
# stay visible even when every test passes.
ACCEPTANCE_LINES: list[str] = []


def record_acceptance(number: int, name: str, failures: list[str]) -> None:
    status = "PASS" if not failures else f"FAIL ({len(failures)} problems)"
    line = f"acceptance {number:02d} {name}: {status}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert not failures, "\n".join([line] + failures[:20])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def showcase():
    return showcase_af()


@pytest.fixture(scope="session")
def audit_result():
    # The default audit is the expensive part of the suite; run it once and
    # share the verdict matrix across every test that inspects it.
    return audit(AuditConfig())


@pytest.fixture(scope="session")
def property_corpus():
    return corpus_frameworks(AuditConfig(graph_count=200, seed=7))
