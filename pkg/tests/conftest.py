import sys
from pathlib import Path

import pytest
from hypothesis import settings

from cuspfree.corpus import load_corpus

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

# Filled by test_acceptance; printed once at the end of the run.
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture(scope="session")
def corpus_contexts(corpus):
    """name -> (entry, ctx); contexts keep their caches across tests."""
    return {e.name: (e, e.context()) for e in corpus}
