"""Shared test scaffolding.

Acceptance tests register a one-line verdict here so the run ends with a
compact pass/fail table regardless of where pytest's own output scrolled.
"""

from hypothesis import settings

# jit compilation makes first calls slow; wall-clock deadlines misfire
settings.register_profile("braidrep", deadline=None)
settings.load_profile("braidrep")

ACCEPTANCE_RESULTS = []


def record_criterion(label, passed):
    ACCEPTANCE_RESULTS.append((label, passed))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed in ACCEPTANCE_RESULTS:
        terminalreporter.write_line("%s  %s" % ("PASS" if passed else "FAIL", label))
