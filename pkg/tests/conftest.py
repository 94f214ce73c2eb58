import pytest

_ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def record_acceptance():
    """record(criterion_id, ok, detail): collected and printed after the run."""

    def record(cid: str, ok: bool, detail: str = "") -> None:
        _ACCEPTANCE[cid] = (ok, detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(_ACCEPTANCE, key=lambda c: [int(p) if p.isdigit() else p for p in c.replace(".", " ").split()]):
        ok, detail = _ACCEPTANCE[cid]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {cid}  {detail}")
