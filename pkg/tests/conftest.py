import sys
from pathlib import Path

import pytest

from hybridkp.preprocess import StopList

sys.path.insert(0, str(Path(__file__).parent))

DATA = Path(__file__).parent / "data"

SAMPLE_SENTENCE = (
    "This study was one of the first to investigate potential risk factors for anxiety "
    "(i.e., behavioral inhibition, parental negative affect, parenting stress) in early childhood."
)
SAMPLE_STOPWORDS = ["this", "was", "one", "of", "the", "first", "to", "for", "i.e", "in", "early"]
SAMPLE_CHUNKS = [
    "study",
    "investigate potential risk factors",
    "anxiety",
    "behavioral inhibition",
    "parental negative affect",
    "parenting stress",
    "childhood",
]
SAMPLE_CANDIDATES = [
    "study", "investigate", "potential", "risk", "factors", "investigate potential",
    "potential risk", "risk factors", "investigate potential risk", "potential risk factors",
    "anxiety", "behavioral inhibition", "behavioral", "inhibition", "parental negative affect",
    "parental", "negative", "affect", "parental negative", "negative affect", "parenting stress",
    "parenting", "stress", "childhood",
]


@pytest.fixture
def sample_stops():
    return StopList.from_words(SAMPLE_STOPWORDS, "sample-test-stoplist")


_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and not report.failed:
        return
    number, title = marker.args
    ok = _ACCEPTANCE.get(number, (True, title))[0]
    _ACCEPTANCE[number] = (ok and not report.failed, title)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        ok, title = _ACCEPTANCE[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}")
