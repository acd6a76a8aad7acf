import os
import sys
from pathlib import Path

from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", deadline=None, max_examples=300, derandomize=True,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

import pytest


@pytest.fixture(scope="session")
def corpus_entries():
    from jordansplit.frontend.corpus import entries

    es = entries()
    for e in es:
        e.phi  # build once
    return es


@pytest.fixture(scope="session")
def jordan_maps(corpus_entries):
    from jordansplit.jordan import is_jordan

    return [e.phi for e in corpus_entries if is_jordan(e.phi)]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
