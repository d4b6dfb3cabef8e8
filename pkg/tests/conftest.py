from pathlib import Path

import pytest

from pntag.lexicons import default_lexicons

FIXTURE_DIR = Path(__file__).resolve().parents[1] / "src" / "pntag" / "data" / "news_fixture"
DATA_DIR = Path(__file__).resolve().parent / "data"

_acceptance: dict[str, list[tuple[str, bool]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(id, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = getattr(report, "_criterion", None)
    if marker is not None:
        _acceptance.setdefault(marker, []).append((report.nodeid, report.passed))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        report._criterion = f"{mark.args[0]}. {mark.args[1]}"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance, key=lambda s: (int(s.split(".")[0].rstrip("abcde")), s)):
        ok = all(passed for _, passed in _acceptance[name])
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")


def fixture_texts():
    return [(p.stem, p.read_text(encoding="utf-8")) for p in sorted(FIXTURE_DIR.glob("*.txt"))]


@pytest.fixture
def lexicons():
    return default_lexicons()
